#include <cstdio>

#include "su2mod/suite.hpp"

int main() {
    const auto results = su2mod::suite::run_all();
    bool all = true;
    for (const auto& r : results) {
        std::printf("[%s] criterion %d: %s; %s (%.2fs)\n", r.pass ? "PASS" : "FAIL",
                    r.number, r.name.c_str(), r.detail.c_str(), r.seconds);
        std::fflush(stdout);
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
