#pragma once

// The full verification battery. Each criterion is a self-contained check
// with pinned tolerances; expected values come from independent closed
// forms or frozen references, never from the code paths under test.

#include <chrono>
#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "su2mod/commutant.hpp"
#include "su2mod/cyclotomic.hpp"
#include "su2mod/modular_data.hpp"
#include "su2mod/qseries.hpp"
#include "su2mod/sectors.hpp"

namespace su2mod::suite {

struct CriterionResult {
    CriterionResult(int number_, std::string name_) : number(number_), name(std::move(name_)) {}

    int number;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

namespace detail {

// closed-form values of the cosine label sums, derived from geometric
// series independently of the field arithmetic
inline long long cos_table(int rho, long long delta, LabelFilter filter) {
    const bool odd = (delta % 2 != 0);
    switch (filter) {
        case LabelFilter::All:
            if (delta == 0) return 4LL * rho - 1;
            return odd ? 0 : -1;
        case LabelFilter::Odd:
            if (delta == 0) return 2LL * rho;
            if (delta == 4LL * rho) return -2LL * rho;
            return 0;
        case LabelFilter::Even:
            if (delta == 0 || delta == 4LL * rho) return 2LL * rho - 1;
            return odd ? 0 : -1;
    }
    throw std::logic_error("cos_table: bad filter");
}

inline std::string expected_label_set(int n) {
    std::string out = "A";
    if (n >= 8 && n % 4 == 0) out += ",D-odd";
    if (n >= 6 && n % 4 == 2) out += ",D-even";
    if (n == 12 || n == 18 || n == 30) out += ",Exceptional(" + std::to_string(n) + ")";
    return out;
}

}  // namespace detail

inline CriterionResult criterion_cosine_tables() {
    CriterionResult r{1, "exact cosine label sums"};
    long long checked = 0;
    r.pass = true;
    for (int rho = 2; rho <= 8 && r.pass; ++rho)
        for (long long delta = 2 - 4LL * rho; delta <= 8LL * rho - 2 && r.pass; ++delta)
            for (auto filter : {LabelFilter::All, LabelFilter::Odd, LabelFilter::Even}) {
                const Integer expected(
                    static_cast<long>(detail::cos_table(rho, delta, filter)));
                if (cos_sum(rho, delta, filter) != expected) {
                    r.pass = false;
                    r.detail = "mismatch at rho=" + std::to_string(rho) +
                               " delta=" + std::to_string(delta);
                    break;
                }
                ++checked;
            }
    if (r.pass) r.detail = std::to_string(checked) + " sums matched closed forms";
    return r;
}

inline CriterionResult criterion_partition_invariance() {
    CriterionResult r{2, "exact invariance of the partition matrices"};
    r.pass = true;
    for (int rho = 2; rho <= 8; ++rho) {
        const auto report = check_super_invariance(rho);
        if (!report.pass()) {
            r.pass = false;
            r.detail = "failure at rho=" + std::to_string(rho);
            return r;
        }
    }
    r.detail = "identity, reflection and total matrices commute exactly for rho=2..8";
    return r;
}

inline CriterionResult criterion_classification() {
    CriterionResult r{3, "bounded enumeration recovers the classification"};
    r.pass = true;
    int total = 0;
    for (int n = 4; n <= 32; ++n) {
        const ModularData md(n - 2);
        const auto res = enumerate_invariants(md, 3);
        std::set<std::string> labels;
        for (const auto& m : res.invariants) {
            if (!md.t_commutes(m) || !md.s_commutes(m)) {
                r.pass = false;
                r.detail = "re-verification failed at n=" + std::to_string(n);
                return r;
            }
            labels.insert(ade_classify(m).str());
        }
        std::string got;
        for (const auto& l : labels) got += (got.empty() ? "" : ",") + l;
        if (got != detail::expected_label_set(n) ||
            labels.size() != res.invariants.size() || res.bound_touched) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n) + " expected {" +
                       detail::expected_label_set(n) + "} got {" + got + "}" +
                       (res.bound_touched ? " (bound touched)" : "");
            return r;
        }
        total += static_cast<int>(res.invariants.size());
    }
    r.detail = std::to_string(total) + " invariants across n=4..32, labels as expected";
    return r;
}

inline CriterionResult criterion_s_transform() {
    CriterionResult r{4, "numeric S transform of characters"};
    r.pass = true;
    double worst_i = 0, worst_2i = 0;
    for (int level = 1; level <= 10; ++level) {
        worst_i = std::max(worst_i,
                           verify_s_transform(level, std::complex<double>(0, 1), 200));
        worst_2i = std::max(worst_2i,
                            verify_s_transform(level, std::complex<double>(0, 2), 400));
    }
    r.pass = worst_i < 1e-8 && worst_2i < 1e-6;
    std::ostringstream os;
    os << "max residual " << worst_i << " at tau=i (tol 1e-8), " << worst_2i
       << " at tau=2i (tol 1e-6)";
    r.detail = os.str();
    return r;
}

inline CriterionResult criterion_t_transform() {
    CriterionResult r{5, "exact T phases of characters"};
    r.pass = true;
    for (int level = 1; level <= 12; ++level) {
        const auto report = verify_t_transform(level, 40);
        if (!report.pass) {
            r.pass = false;
            r.detail = "failure at level " + std::to_string(level);
            return r;
        }
    }
    r.detail = "all labels match for levels 1..12";
    return r;
}

inline CriterionResult criterion_sector_sum() {
    CriterionResult r{6, "sector sum reproduces the partition matrix"};
    r.pass = true;
    for (int rho = 2; rho <= 8; ++rho) {
        const auto sp = super_partition(rho);
        if (sp.matrix != InvariantMatrix::identity(4 * rho) + d_odd_invariant(rho)) {
            r.pass = false;
            r.detail = "algebraic mismatch at rho=" + std::to_string(rho);
            return r;
        }
    }
    const std::complex<double> tau(0.5, 1.0);
    const auto sp2 = super_partition(2);
    const double diff = std::abs(evaluate_partition(sp2.matrix, tau, 300) -
                                 evaluate_partition(sp2.matrix, -1.0 / tau, 300));
    r.pass = diff < 1e-6;
    std::ostringstream os;
    os << "exact equality for rho=2..8; numeric S invariance residual " << diff
       << " (tol 1e-6)";
    r.detail = os.str();
    return r;
}

inline CriterionResult criterion_unitarity_probe() {
    CriterionResult r{7, "S stability and orthogonality on the sector span"};
    r.pass = true;
    double worst_stab = 0, worst_defect = 0;
    for (int rho : {2, 3, 4}) {
        const auto probe = unitarity_probe(rho);
        worst_stab = std::max(worst_stab, probe.stability_residual);
        worst_defect = std::max(worst_defect, probe.unitarity_defect);
        if (!probe.stable) r.pass = false;
    }
    r.pass = r.pass && worst_stab < 1e-10 && worst_defect < 1e-9;
    std::ostringstream os;
    os << "max stability residual " << worst_stab << " (tol 1e-10), max defect "
       << worst_defect << " (tol 1e-9)";
    r.detail = os.str();
    return r;
}

inline CriterionResult criterion_property_suites() {
    CriterionResult r{8, "randomized ring, transform and character properties"};
    r.pass = true;

    std::mt19937_64 rng(424242);
    for (int conductor : {8, 12, 24, 40}) {
        std::uniform_int_distribution<long long> exp_dist(0, conductor - 1);
        std::uniform_int_distribution<long> num_dist(-3, 3);
        std::uniform_int_distribution<long> den_dist(1, 3);
        std::vector<Cyclotomic> elems;
        elems.reserve(1000);
        for (int i = 0; i < 1000; ++i) {
            Cyclotomic x = Cyclotomic::zero(conductor);
            for (int t = 0; t < 4; ++t)
                x.add_root_multiple(exp_dist(rng), make_rational(num_dist(rng), den_dist(rng)));
            elems.push_back(std::move(x));
        }
        for (std::size_t i = 0; i < elems.size(); ++i) {
            const Cyclotomic& x = elems[i];
            const Cyclotomic& y = elems[(7 * i + 1) % elems.size()];
            const Cyclotomic& z = elems[(13 * i + 2) % elems.size()];
            const bool axioms = (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) &&
                                x * (y + z) == x * y + x * z && x * y == y * x;
            const bool hom = std::abs((x * y).embed() - x.embed() * y.embed()) < 1e-12 &&
                             std::abs((x + y).embed() - (x.embed() + y.embed())) < 1e-12;
            if (!axioms || !hom) {
                r.pass = false;
                r.detail = "field property failure at conductor " + std::to_string(conductor);
                return r;
            }
        }
    }

    for (int level = 1; level <= 30; ++level) {
        const ModularData md(level);  // construction verifies sHat^2 = (n/2) I
        if (!md.s_commutes(InvariantMatrix::identity(md.n()))) {
            r.pass = false;
            r.detail = "sine square identity failed at level " + std::to_string(level);
            return r;
        }
    }

    for (int level = 1; level <= 12; ++level)
        for (int i = 0; i <= level; ++i) {
            const QSeries chi = affine_character(level, i, 80);
            const Rational expected =
                make_rational((i + 1) * (i + 1), 4 * (level + 2)) - make_rational(1, 8);
            bool ok = chi.leading_exponent() == expected;
            for (const auto& c : chi.coefficients()) ok = ok && c >= 0;
            if (!ok) {
                r.pass = false;
                r.detail = "character property failure at level " + std::to_string(level) +
                           " i=" + std::to_string(i);
                return r;
            }
        }

    r.detail = "4000 field elements, 30 sine squares, 90 characters checked";
    return r;
}

inline std::vector<CriterionResult> run_all() {
    using Clock = std::chrono::steady_clock;
    std::vector<CriterionResult (*)()> criteria = {
        criterion_cosine_tables,   criterion_partition_invariance,
        criterion_classification,  criterion_s_transform,
        criterion_t_transform,     criterion_sector_sum,
        criterion_unitarity_probe, criterion_property_suites,
    };
    std::vector<CriterionResult> results;
    results.reserve(criteria.size());
    for (auto fn : criteria) {
        const auto start = Clock::now();
        CriterionResult r = fn();
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace su2mod::suite
