#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <set>
#include <vector>

#include "su2mod/sectors.hpp"

using su2mod::InvariantMatrix;
using su2mod::ModularData;
using su2mod::SectorKind;

TEST_CASE("sector inventory for rho = 2") {
    const auto sectors = su2mod::sector_inventory(2);
    REQUIRE(sectors.size() == 7);

    int traces = 0, supers = 0, twisted = 0, sigma = 0;
    for (const auto& s : sectors) {
        switch (s.kind) {
            case SectorKind::Trace: ++traces; break;
            case SectorKind::Supertrace: ++supers; break;
            case SectorKind::Twisted: ++twisted; break;
            case SectorKind::TwistedSigma: ++sigma; break;
        }
    }
    CHECK(traces == 2);
    CHECK(supers == 2);
    CHECK(twisted == 2);
    CHECK(sigma == 1);

    CHECK(sectors[0].coeffs == std::vector<long long>{1, 0, 0, 0, 0, 0, 1});
    CHECK(sectors[1].coeffs == std::vector<long long>{0, 0, 1, 0, 1, 0, 0});
    CHECK(sectors[2].coeffs == std::vector<long long>{1, 0, 0, 0, 0, 0, -1});
    CHECK(sectors[3].coeffs == std::vector<long long>{0, 0, 1, 0, -1, 0, 0});
    CHECK(sectors[4].coeffs == std::vector<long long>{0, 1, 0, 0, 0, 1, 0});
    CHECK(sectors[5].coeffs == std::vector<long long>{0, 0, 0, 1, 0, 0, 0});
    CHECK(sectors[6].coeffs == sectors[5].coeffs);
}

TEST_CASE("inventory sizes and distinct span") {
    for (int rho = 2; rho <= 8; ++rho) {
        const auto sectors = su2mod::sector_inventory(rho);
        CHECK(static_cast<int>(sectors.size()) == 3 * rho + 1);
        std::set<std::vector<long long>> distinct;
        for (const auto& s : sectors) distinct.insert(s.coeffs);
        CHECK(static_cast<int>(distinct.size()) == 3 * rho);
    }
}

TEST_CASE("total partition function matrix for rho = 2") {
    const auto sp = su2mod::super_partition(2);
    InvariantMatrix expected(8);
    for (int l = 1; l < 8; ++l) expected.at(l, l) = (l == 2 || l == 6) ? 1 : 2;
    expected.at(2, 6) = 1;
    expected.at(6, 2) = 1;
    CHECK(sp.matrix == expected);
}

TEST_CASE("total partition function equals diagonal plus reflection") {
    for (int rho = 2; rho <= 8; ++rho) {
        const auto sp = su2mod::super_partition(rho);
        CHECK(sp.matrix ==
              InvariantMatrix::identity(4 * rho) + su2mod::d_odd_invariant(rho));
    }
}

TEST_CASE("partition function invariance report") {
    for (int rho : {2, 5}) {
        const auto report = su2mod::check_super_invariance(rho);
        INFO("rho=" << rho);
        CHECK(report.pass());
        CHECK(report.t_invariant());
        CHECK(report.s_invariant());
    }
}

TEST_CASE("perturbing the partition matrix breaks invariance") {
    const ModularData md(6);
    InvariantMatrix total = InvariantMatrix::identity(8) + su2mod::d_odd_invariant(2);
    total.at(1, 2) += 1;
    CHECK_FALSE(md.t_commutes(total));
    CHECK_FALSE(md.s_commutes(total));
}

TEST_CASE("reflection sign identity for sine entries") {
    for (int rho : {2, 3}) {
        const ModularData md(4 * rho - 2);
        const int n = 4 * rho;
        for (int mu = 1; mu < n; ++mu)
            for (int l = 1; l < n; ++l) {
                const auto lhs = md.s_entry(n - mu, l);
                const auto rhs = md.s_entry(mu, l);
                INFO("rho=" << rho << " mu=" << mu << " l=" << l);
                if (l % 2 == 1) {
                    CHECK(lhs == rhs);
                } else {
                    CHECK((lhs + rhs).is_zero());
                }
            }
    }
}

TEST_CASE("numeric partition function is S invariant") {
    const auto sp = su2mod::super_partition(2);
    const std::complex<double> tau(0.5, 1.0);
    const auto z = su2mod::evaluate_partition(sp.matrix, tau, 300);
    const auto zs = su2mod::evaluate_partition(sp.matrix, -1.0 / tau, 300);
    CHECK(std::abs(z - zs) < 1e-6);
    CHECK(std::abs(z.imag()) < 1e-9);
    CHECK(z.real() > 0);
}

TEST_CASE("sector span is closed under S and the action is orthogonal") {
    for (int rho : {2, 3, 4}) {
        const auto probe = su2mod::unitarity_probe(rho);
        INFO("rho=" << rho);
        CHECK(probe.span == 3 * rho);
        CHECK(probe.stable);
        CHECK(probe.stability_residual < 1e-10);
        CHECK(probe.unitarity_defect < 1e-9);
        CHECK(probe.series_residual == -1.0);

        // re-check orthogonality directly from the reported matrix
        const Eigen::MatrixXd gram = probe.rep_matrix * probe.rep_matrix.transpose();
        CHECK((gram - Eigen::MatrixXd::Identity(probe.span, probe.span))
                  .cwiseAbs()
                  .maxCoeff() < 1e-9);
    }
}

TEST_CASE("probe series cross-check") {
    const auto probe = su2mod::unitarity_probe(2, 200);
    CHECK(probe.series_residual >= 0);
    CHECK(probe.series_residual < 1e-6);
}

TEST_CASE("sector arguments are validated") {
    CHECK_THROWS_AS(su2mod::sector_inventory(1), std::invalid_argument);
    CHECK_THROWS_AS(su2mod::super_partition(0), std::invalid_argument);
    CHECK_THROWS_AS(su2mod::unitarity_probe(2, 0, 20), std::invalid_argument);
}
