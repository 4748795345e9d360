#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "su2mod/modular_data.hpp"
#include "su2mod/numeric.hpp"

using su2mod::Cyclotomic;
using su2mod::InvariantMatrix;
using su2mod::ModularData;
using su2mod::Rational;
using su2mod::make_rational;

TEST_CASE("phase exponents at small levels") {
    const ModularData md2(2);
    CHECK(md2.t_exponent(1) == make_rational(15, 16));
    CHECK(md2.t_exponent(2) == make_rational(1, 8));
    CHECK(md2.t_exponent(3) == make_rational(7, 16));

    const ModularData md6(6);
    CHECK(md6.t_exponent(1) == make_rational(29, 32));
}

TEST_CASE("sine entries are symmetric and positive on the first row") {
    const ModularData md(5);
    for (int l = 1; l < md.n(); ++l)
        for (int m = 1; m < md.n(); ++m)
            CHECK(md.s_entry(l, m) == md.s_entry(m, l));
    for (int m = 1; m < md.n(); ++m) {
        const auto v = md.s_entry(1, m).embed();
        CHECK(v.real() > 0);
        CHECK(std::abs(v.imag()) < 1e-12);
    }
}

TEST_CASE("numeric sine matrix agrees with exact entries") {
    const ModularData md(6);
    const Eigen::MatrixXd s = su2mod::numeric_s_matrix(md.n());
    const double scale = std::sqrt(2.0 / md.n());
    for (int l = 1; l < md.n(); ++l)
        for (int m = 1; m < md.n(); ++m)
            CHECK(std::abs(s(l - 1, m - 1) - scale * md.s_entry(l, m).embed().real()) < 1e-12);
}

TEST_CASE("label folding") {
    const ModularData md(6);  // n = 8
    CHECK(md.fold(0).sign == 0);
    CHECK(md.fold(8).sign == 0);
    CHECK(md.fold(16).sign == 0);
    CHECK(md.fold(3).sign == 1);
    CHECK(md.fold(3).label == 3);
    CHECK(md.fold(9).sign == -1);
    CHECK(md.fold(9).label == 7);
    CHECK(md.fold(-3).sign == -1);
    CHECK(md.fold(-3).label == 3);
    CHECK(md.fold(17).sign == 1);
    CHECK(md.fold(17).label == 1);
}

TEST_CASE("phase commutation is the square congruence") {
    const ModularData md(6);  // n = 8, period 32
    CHECK(md.t_commutes(InvariantMatrix::identity(8)));

    InvariantMatrix swap26(8);
    swap26.at(2, 6) = 1;  // 4 and 36 agree mod 32
    CHECK(md.t_commutes(swap26));

    InvariantMatrix bad(8);
    bad.at(1, 2) = 1;
    CHECK_FALSE(md.t_commutes(bad));
}

TEST_CASE("sine commutation detects non-invariants") {
    const ModularData md(6);
    CHECK(md.s_commutes(InvariantMatrix::identity(8)));

    InvariantMatrix swap26(8);
    swap26.at(2, 6) = 1;
    CHECK_FALSE(md.s_commutes(swap26));
}

TEST_CASE("sine square identity via generic field multiplication") {
    // independent of the product-to-sum route used by s_commutes
    for (int level = 1; level <= 6; ++level) {
        const ModularData md(level);
        const int n = md.n();
        for (int l = 1; l < n; ++l)
            for (int m = 1; m < n; ++m) {
                Cyclotomic acc = Cyclotomic::zero(2 * n);
                for (int a = 1; a < n; ++a) acc += md.s_entry(l, a) * md.s_entry(a, m);
                INFO("level=" << level << " l=" << l << " m=" << m);
                if (l == m) {
                    CHECK(acc.rational_value() == make_rational(n, 2));
                } else {
                    CHECK(acc.is_zero());
                }
            }
    }
}

TEST_CASE("numeric modular group relation") {
    for (int level = 1; level <= 30; ++level) {
        const ModularData md(level);
        const int dim = md.n() - 1;
        const Eigen::MatrixXd s = su2mod::numeric_s_matrix(md.n());
        Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(dim, dim);
        for (int l = 1; l <= dim; ++l) {
            const double ang = 2 * M_PI * md.t_exponent(l).get_d();
            t(l - 1, l - 1) = std::complex<double>(std::cos(ang), std::sin(ang));
        }
        const Eigen::MatrixXcd st = s * t;
        const Eigen::MatrixXcd lhs = st * st * st;
        const Eigen::MatrixXcd rhs = (s * s).cast<std::complex<double>>();
        INFO("level=" << level);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("matrix labels are validated") {
    const ModularData md(2);
    CHECK_THROWS_AS(md.t_exponent(0), std::out_of_range);
    CHECK_THROWS_AS(md.t_exponent(4), std::out_of_range);
    CHECK_THROWS_AS(md.s_entry(1, 5), std::out_of_range);
    CHECK_THROWS_AS(md.t_commutes(InvariantMatrix::identity(5)), std::invalid_argument);
    CHECK_THROWS_AS(ModularData(0), std::invalid_argument);
}
