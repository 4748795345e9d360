#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "su2mod/qseries.hpp"

using su2mod::Integer;
using su2mod::QSeries;
using su2mod::Rational;
using su2mod::make_rational;

namespace {

// direct lattice sums, sharing no code with the series pipeline
std::complex<double> theta_prime_direct(long long m, int modulus, std::complex<double> tau) {
    std::complex<double> acc = 0;
    for (long long t = -80; t <= 80; ++t) {
        const double j = static_cast<double>(t) + static_cast<double>(m) / (2.0 * modulus);
        const double w = 2.0 * modulus * j;
        acc += w * std::exp(std::complex<double>(0, 2 * M_PI) * tau * (modulus * j * j));
    }
    return acc;
}

std::complex<double> character_direct(int level, int i, std::complex<double> tau) {
    const int n = level + 2;
    return theta_prime_direct(i + 1, n, tau) / theta_prime_direct(1, 2, tau);
}

QSeries random_series(std::mt19937_64& rng, int order) {
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::vector<Integer> c(order);
    for (auto& v : c) v = coeff(rng);
    return QSeries(make_rational(coeff(rng), 8), std::move(c));
}

}  // namespace

TEST_CASE("plain theta series") {
    const QSeries t12 = su2mod::theta(1, 2, 12);
    CHECK(t12.leading_exponent() == make_rational(1, 8));
    // exponents 1/8 (2j+1)^2, so offsets 0, 1, 3, 6, 10
    const std::vector<Integer> expected12 = {1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0};
    CHECK(t12.coefficients() == expected12);

    const QSeries t01 = su2mod::theta(0, 1, 10);
    CHECK(t01.leading_exponent() == 0);
    const std::vector<Integer> expected01 = {1, 2, 0, 0, 2, 0, 0, 0, 0, 2};
    CHECK(t01.coefficients() == expected01);
}

TEST_CASE("theta depends on the label only mod 2P") {
    for (long long m = -3; m <= 3; ++m) {
        CHECK(su2mod::theta(m, 5, 40) == su2mod::theta(m + 10, 5, 40));
        CHECK(su2mod::theta_prime(m, 5, 40) == su2mod::theta_prime(m + 10, 5, 40));
    }
}

TEST_CASE("weighted theta at the boundary label vanishes") {
    CHECK(su2mod::theta_prime(0, 3, 30).is_zero());
    CHECK(su2mod::theta_prime(3, 3, 30).is_zero());
    CHECK(su2mod::theta_prime(-3, 3, 30).is_zero());
}

TEST_CASE("eta cubed expansion") {
    const QSeries eta3 = su2mod::theta_prime(1, 2, 11);
    CHECK(eta3.leading_exponent() == make_rational(1, 8));
    const std::vector<Integer> expected = {1, -3, 0, 5, 0, 0, -7, 0, 0, 0, 9};
    CHECK(eta3.coefficients() == expected);
}

TEST_CASE("division undoes multiplication") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 30; ++rep) {
        QSeries a = random_series(rng, 24);
        std::vector<Integer> unit = a.coefficients();
        unit[0] = (rep % 2 == 0) ? 1 : -1;  // force an invertible denominator
        const QSeries b(a.leading_exponent(), unit);
        const QSeries prod = a * b;
        CHECK(su2mod::divide(prod, b) == a.truncated(prod.order()));
    }
}

TEST_CASE("division requires a unit leading coefficient") {
    const QSeries two(Rational(0), std::vector<Integer>{2, 1, 1});
    const QSeries one(Rational(0), std::vector<Integer>{1, 1, 1});
    CHECK_THROWS_AS(su2mod::divide(one, two), std::invalid_argument);
    CHECK_NOTHROW(su2mod::divide(two, one));
}

TEST_CASE("vacuum character at level 1") {
    const QSeries chi = su2mod::affine_character(1, 0, 16);
    CHECK(chi.leading_exponent() == make_rational(-1, 24));
    CHECK(chi.coefficients()[0] == 1);
    CHECK(chi.coefficients()[1] == 3);
}

TEST_CASE("character top dimension equals i + 1") {
    for (int level : {1, 2, 3, 6}) {
        for (int i = 0; i <= level; ++i) {
            const QSeries chi = su2mod::affine_character(level, i, 24);
            const int n = level + 2;
            INFO("level=" << level << " i=" << i);
            CHECK(chi.coefficients().front() == i + 1);
            CHECK(chi.leading_exponent() ==
                  make_rational((i + 1) * (i + 1), 4 * n) - make_rational(1, 8));
        }
    }
}

TEST_CASE("character coefficients are nonnegative") {
    for (int level = 1; level <= 12; ++level)
        for (int i = 0; i <= level; ++i) {
            const QSeries chi = su2mod::affine_character(level, i, 120);
            for (const auto& c : chi.coefficients()) {
                REQUIRE(c >= 0);
            }
        }
}

TEST_CASE("series evaluation against the direct lattice sum") {
    const std::complex<double> tau(0, 2);
    const QSeries chi = su2mod::affine_character(1, 0, 60);
    const auto got = su2mod::evaluate(chi, tau);
    const auto want = character_direct(1, 0, tau);
    CHECK(std::abs(got.value - want) < 1e-10);
    // frozen reference value for chi_1 at level 1, tau = 2i
    CHECK(std::abs(got.value - std::complex<double>(1.6881094559086414, 0.0)) < 1e-10);
    CHECK(got.tail_bound < 1e-12);

    const std::complex<double> tau2(0.3, 0.8);
    for (int i = 0; i <= 2; ++i) {
        const QSeries c2 = su2mod::affine_character(2, i, 80);
        CHECK(std::abs(su2mod::evaluate(c2, tau2).value - character_direct(2, i, tau2)) < 1e-9);
    }
}

TEST_CASE("evaluation rejects tau outside the upper half plane") {
    const QSeries chi = su2mod::affine_character(1, 0, 8);
    CHECK_THROWS_AS(su2mod::evaluate(chi, std::complex<double>(0.5, 0)), std::invalid_argument);
    CHECK_THROWS_AS(su2mod::evaluate(chi, std::complex<double>(0, -1)), std::invalid_argument);
}

TEST_CASE("modular phase exponents are exact") {
    for (int level = 1; level <= 12; ++level) {
        const auto report = su2mod::verify_t_transform(level, 40);
        INFO("level=" << level);
        CHECK(report.pass);
        CHECK(report.failed_labels.empty());
    }
}

TEST_CASE("sine transform residuals are small") {
    CHECK(su2mod::verify_s_transform(2, std::complex<double>(0, 2), 400) < 1e-8);
    CHECK(su2mod::verify_s_transform(6, std::complex<double>(1.0 / 3, 1), 300) < 1e-6);
}

TEST_CASE("sine transform residual shrinks with the order") {
    const std::complex<double> tau(0, 1);
    std::vector<double> residuals;
    for (int order : {1, 2, 3, 4, 6, 8})
        residuals.push_back(su2mod::verify_s_transform(2, tau, order));
    for (std::size_t i = 0; i + 1 < residuals.size(); ++i)
        CHECK(residuals[i + 1] <= residuals[i] * 1.01 + 1e-13);
    CHECK(residuals.back() < 1e-10);
    CHECK(residuals.front() > residuals.back());
}

TEST_CASE("incompatible exponent grids are rejected") {
    const QSeries a(make_rational(1, 8), std::vector<Integer>{1, 1});
    const QSeries b(make_rational(1, 3), std::vector<Integer>{1, 1});
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_NOTHROW(a + QSeries(make_rational(9, 8), std::vector<Integer>{1, 1}));
}
