#pragma once

// Exact q-expansions. A series is q^{h0} * sum_{m >= 0} a_m q^m with a
// rational leading exponent h0 and integer coefficients; `order` counts
// the retained coefficients. All exponents in one series differ from h0
// by integers, so adding two series requires their h0 to differ by an
// integer.

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "su2mod/rational.hpp"

namespace su2mod {

class QSeries {
public:
    QSeries(Rational h0, std::vector<Integer> coeffs)
        : h0_(std::move(h0)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("QSeries: order must be positive");
    }

    static QSeries zero(const Rational& h0, int order) {
        if (order < 1) throw std::invalid_argument("QSeries: order must be positive");
        return QSeries(h0, std::vector<Integer>(order));
    }

    const Rational& leading_exponent() const { return h0_; }
    const std::vector<Integer>& coefficients() const { return coeffs_; }
    int order() const { return static_cast<int>(coeffs_.size()); }

    const Integer& coefficient(int offset) const {
        if (offset < 0 || offset >= order())
            throw std::out_of_range("QSeries: coefficient offset outside retained window");
        return coeffs_[static_cast<std::size_t>(offset)];
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    // drop leading zero coefficients so that a_0 != 0 (zero series pass
    // through unchanged)
    QSeries normalized() const {
        std::size_t skip = 0;
        while (skip < coeffs_.size() && coeffs_[skip] == 0) ++skip;
        if (skip == 0 || skip == coeffs_.size()) return *this;
        return QSeries(h0_ + Rational(static_cast<long>(skip)),
                       std::vector<Integer>(coeffs_.begin() + skip, coeffs_.end()));
    }

    QSeries truncated(int order) const {
        if (order < 1 || order > this->order())
            throw std::invalid_argument("QSeries: bad truncation order");
        return QSeries(h0_, std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + order));
    }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.h0_ == b.h0_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

private:
    Rational h0_;
    std::vector<Integer> coeffs_;
};

namespace detail {

// offset of b's exponent window relative to a's; must be an integer
inline long exponent_shift(const QSeries& a, const QSeries& b) {
    const Rational diff = b.leading_exponent() - a.leading_exponent();
    if (!is_integer(diff))
        throw std::invalid_argument("QSeries: leading exponents differ by a non-integer");
    if (!diff.get_num().fits_slong_p())
        throw std::invalid_argument("QSeries: exponent shift out of range");
    return diff.get_num().get_si();
}

}  // namespace detail

inline QSeries operator+(const QSeries& a, const QSeries& b) {
    const long shift = detail::exponent_shift(a, b);
    if (shift < 0) return b + a;
    // a starts at or below b; the result window is the reliability overlap
    const long end = std::min<long>(a.order(), shift + b.order());
    std::vector<Integer> coeffs(static_cast<std::size_t>(end));
    for (long m = 0; m < end; ++m) {
        coeffs[m] = a.coefficients()[m];
        if (m >= shift) coeffs[m] += b.coefficients()[m - shift];
    }
    return QSeries(a.leading_exponent(), std::move(coeffs));
}

inline QSeries operator*(const Integer& scale, const QSeries& s) {
    std::vector<Integer> coeffs = s.coefficients();
    for (auto& c : coeffs) c *= scale;
    return QSeries(s.leading_exponent(), std::move(coeffs));
}

inline QSeries operator-(const QSeries& a, const QSeries& b) {
    return a + Integer(-1) * b;
}

inline QSeries operator*(const QSeries& a, const QSeries& b) {
    const int ord = std::min(a.order(), b.order());
    std::vector<Integer> coeffs(static_cast<std::size_t>(ord));
    for (int i = 0; i < ord; ++i) {
        if (a.coefficients()[i] == 0) continue;
        for (int j = 0; i + j < ord; ++j) {
            if (b.coefficients()[j] == 0) continue;
            coeffs[i + j] += a.coefficients()[i] * b.coefficients()[j];
        }
    }
    return QSeries(a.leading_exponent() + b.leading_exponent(), std::move(coeffs));
}

// exact long division; the denominator must have unit leading coefficient
// after normalization, which keeps every quotient coefficient an integer
inline QSeries divide(const QSeries& num, const QSeries& den) {
    const QSeries d = den.normalized();
    if (d.is_zero()) throw std::invalid_argument("divide: zero denominator");
    const Integer& lead = d.coefficients().front();
    if (lead != 1 && lead != -1)
        throw std::invalid_argument("divide: denominator leading coefficient must be +-1");
    const int ord = std::min(num.order(), d.order());
    std::vector<Integer> coeffs(static_cast<std::size_t>(ord));
    for (int m = 0; m < ord; ++m) {
        Integer acc = num.coefficients()[m];
        for (int j = 1; j <= m; ++j) {
            if (d.coefficients()[j] == 0) continue;
            acc -= d.coefficients()[j] * coeffs[m - j];
        }
        coeffs[m] = (lead == 1) ? acc : Integer(-acc);
    }
    return QSeries(num.leading_exponent() - d.leading_exponent(), std::move(coeffs));
}

// Theta_{m,P}(q) = sum over j in Z + m/(2P) of q^{P j^2}; depends on m
// only through its class mod 2P
inline QSeries theta(long long m, int modulus, int order) {
    if (modulus < 1) throw std::invalid_argument("theta: modulus must be positive");
    if (order < 1) throw std::invalid_argument("theta: order must be positive");
    const long long two_p = 2LL * modulus;
    long long r = m % two_p;
    if (r < 0) r += two_p;
    if (r > modulus) r -= two_p;  // representative in (-P, P]
    std::vector<Integer> coeffs(static_cast<std::size_t>(order));
    const long long tmax =
        static_cast<long long>(std::ceil(std::sqrt(static_cast<double>(order) / modulus))) + 2;
    for (long long t = -tmax; t <= tmax; ++t) {
        const long long e = modulus * t * t + r * t;
        if (e >= 0 && e < order) coeffs[static_cast<std::size_t>(e)] += 1;
    }
    return QSeries(make_rational(r * r, 4LL * modulus), std::move(coeffs));
}

// weighted variant: sum of (2 P j) q^{P j^2} over the same coset;
// theta_prime(1, 2) is the eta-cubed expansion
inline QSeries theta_prime(long long m, int modulus, int order) {
    if (modulus < 1) throw std::invalid_argument("theta_prime: modulus must be positive");
    if (order < 1) throw std::invalid_argument("theta_prime: order must be positive");
    const long long two_p = 2LL * modulus;
    long long r = m % two_p;
    if (r < 0) r += two_p;
    if (r > modulus) r -= two_p;
    std::vector<Integer> coeffs(static_cast<std::size_t>(order));
    const long long tmax =
        static_cast<long long>(std::ceil(std::sqrt(static_cast<double>(order) / modulus))) + 2;
    for (long long t = -tmax; t <= tmax; ++t) {
        const long long e = modulus * t * t + r * t;
        if (e >= 0 && e < order)
            coeffs[static_cast<std::size_t>(e)] += static_cast<long>(two_p * t + r);
    }
    return QSeries(make_rational(r * r, 4LL * modulus), std::move(coeffs));
}

// graded trace of the level-k module with label i in 0..k; the constant
// term equals the top-space dimension i + 1
inline QSeries affine_character(int level, int i, int order) {
    if (level < 1) throw std::invalid_argument("affine_character: level must be positive");
    if (i < 0 || i > level)
        throw std::invalid_argument("affine_character: module index must lie in 0..level");
    const int n = level + 2;
    const QSeries chi = divide(theta_prime(i + 1, n, order), theta_prime(1, 2, order));
    const Rational expected_h0 =
        make_rational(static_cast<long>(i + 1) * (i + 1), 4L * n) - make_rational(1, 8);
    if (chi.leading_exponent() != expected_h0)
        throw std::logic_error("affine_character: unexpected leading exponent");
    if (chi.coefficients().front() != i + 1)
        throw std::logic_error("affine_character: unexpected top dimension");
    for (const auto& c : chi.coefficients())
        if (c < 0) throw std::logic_error("affine_character: negative coefficient");
    return chi;
}

struct SeriesValue {
    std::complex<double> value;
    double tail_bound;  // crude estimate from the last retained nonzero term
};

inline SeriesValue evaluate(const QSeries& s, std::complex<double> tau, int digits = 15) {
    if (!(tau.imag() > 0)) throw std::invalid_argument("evaluate: Im(tau) must be positive");
    if (digits < 1 || digits > 15)
        throw std::invalid_argument("evaluate: supported precision is 1..15 digits");
    const std::complex<double> two_pi_i_tau = std::complex<double>(0, 2 * M_PI) * tau;
    const std::complex<double> q = std::exp(two_pi_i_tau);
    const double h0 = s.leading_exponent().get_d();
    const std::complex<double> lead = std::exp(two_pi_i_tau * h0);

    std::complex<double> acc = 0;
    std::complex<double> qp = 1;
    for (int m = 0; m < s.order(); ++m) {
        const Integer& c = s.coefficients()[m];
        if (c != 0) acc += c.get_d() * qp;
        qp *= q;
    }

    const double qabs = std::abs(q);
    int last = s.order() - 1;
    while (last >= 0 && s.coefficients()[last] == 0) --last;
    double tail = 0;
    if (last >= 0) {
        const double last_mag =
            std::abs(s.coefficients()[last].get_d()) * std::pow(qabs, h0 + last);
        tail = (2 * qabs < 1) ? last_mag * 2 * qabs / (1 - 2 * qabs)
                              : std::numeric_limits<double>::infinity();
    }
    return {lead * acc, tail};
}

struct TTransformCheck {
    bool pass = true;
    std::vector<int> failed_labels;
};

// Under tau -> tau + 1 each term q^{h0+m} picks up the phase e(h0 + m),
// and every retained exponent differs from h0 by an integer, so the
// whole character scales by e(h0). The check is that h0 matches
// lambda^2/(4n) - 1/8 modulo 1 for every label.
inline TTransformCheck verify_t_transform(int level, int order) {
    const int n = level + 2;
    TTransformCheck report;
    for (int lam = 1; lam <= n - 1; ++lam) {
        const QSeries chi = affine_character(level, lam - 1, order);
        const Rational expected =
            mod_one(make_rational(static_cast<long>(lam) * lam, 4L * n) - make_rational(1, 8));
        if (mod_one(chi.leading_exponent()) != expected) {
            report.pass = false;
            report.failed_labels.push_back(lam);
        }
    }
    return report;
}

// numeric check of chi(-1/tau) = sum_mu sqrt(2/n) sin(pi lam mu / n)
// chi_mu(tau); returns the worst absolute residual over all labels
inline double verify_s_transform(int level, std::complex<double> tau, int order) {
    if (!(tau.imag() > 0))
        throw std::invalid_argument("verify_s_transform: Im(tau) must be positive");
    const int n = level + 2;
    const std::complex<double> stau = -1.0 / tau;
    std::vector<std::complex<double>> at_tau(n - 1), at_stau(n - 1);
    for (int lam = 1; lam <= n - 1; ++lam) {
        const QSeries chi = affine_character(level, lam - 1, order);
        at_tau[lam - 1] = evaluate(chi, tau).value;
        at_stau[lam - 1] = evaluate(chi, stau).value;
    }
    const double scale = std::sqrt(2.0 / n);
    double worst = 0;
    for (int lam = 1; lam <= n - 1; ++lam) {
        std::complex<double> rhs = 0;
        for (int mu = 1; mu <= n - 1; ++mu)
            rhs += scale * std::sin(M_PI * lam * mu / n) * at_tau[mu - 1];
        worst = std::max(worst, std::abs(at_stau[lam - 1] - rhs));
    }
    return worst;
}

}  // namespace su2mod
