#pragma once

// Exact arithmetic in the cyclotomic fields Q(zeta_N).
//
// An element is a rational coordinate vector over the power basis
// {zeta_N^j : 0 <= j < phi(N)}, kept reduced modulo the N-th cyclotomic
// polynomial. The reduced form is unique, so equality is coordinate
// equality. Operands with different conductors are lifted to the lcm of
// the two conductors before combining; results are never descended back
// to a smaller field.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "su2mod/rational.hpp"

namespace su2mod {

namespace detail {

// dense integer polynomials, ascending coefficient order
using IntPoly = std::vector<Integer>;

inline IntPoly poly_div_exact(IntPoly num, const IntPoly& den) {
    if (den.empty() || den.back() == 0)
        throw std::logic_error("poly_div_exact: bad divisor");
    const std::size_t dn = num.size(), dd = den.size();
    if (dn < dd) {
        for (const auto& c : num)
            if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
        return {};
    }
    const Integer& lead = den.back();
    IntPoly quot(dn - dd + 1);
    for (std::size_t i = dn; i >= dd; --i) {
        const std::size_t top = i - 1;
        if (num[top] == 0) continue;
        if (!mpz_divisible_p(num[top].get_mpz_t(), lead.get_mpz_t()))
            throw std::logic_error("poly_div_exact: inexact division");
        const Integer q = num[top] / lead;
        quot[top - (dd - 1)] = q;
        for (std::size_t j = 0; j < dd; ++j)
            num[top - (dd - 1) + j] -= q * den[j];
    }
    for (std::size_t j = 0; j + 1 < dd; ++j)
        if (num[j] != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return quot;
}

// Phi_n, computed as (x^n - 1) / prod_{d | n, d < n} Phi_d and memoized
inline const IntPoly& cyclotomic_polynomial(int n) {
    static std::map<int, IntPoly> cache{{1, IntPoly{Integer(-1), Integer(1)}}};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    std::vector<int> divisors;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    for (int d : divisors) {
        if (cache.count(d)) continue;
        IntPoly p(d + 1);
        p[0] = -1;
        p[d] = 1;
        for (int e : divisors) {
            if (e >= d || d % e != 0) continue;
            p = poly_div_exact(std::move(p), cache.at(e));
        }
        cache.emplace(d, std::move(p));
    }
    return cache.at(n);
}

// Per-conductor reduction data: canonical coordinates of every power
// zeta_N^e needed by ring operations (e up to max(N-1, 2 phi(N) - 2)).
class FieldTable {
public:
    static const FieldTable& get(int conductor) {
        static std::map<int, std::unique_ptr<FieldTable>> cache;
        static std::mutex mtx;
        std::lock_guard<std::mutex> lock(mtx);
        if (conductor < 1) throw std::invalid_argument("FieldTable: conductor must be positive");
        auto& slot = cache[conductor];
        if (!slot) slot.reset(new FieldTable(conductor));
        return *slot;
    }

    int conductor() const { return conductor_; }
    int degree() const { return degree_; }

    const std::vector<Integer>& power(long long exponent) const {
        if (exponent < 0 || exponent >= static_cast<long long>(powers_.size()))
            throw std::logic_error("FieldTable: exponent outside table");
        return powers_[static_cast<std::size_t>(exponent)];
    }

private:
    explicit FieldTable(int conductor) : conductor_(conductor) {
        const IntPoly& phi = cyclotomic_polynomial(conductor);
        degree_ = static_cast<int>(phi.size()) - 1;
        const long long max_exp =
            std::max<long long>(conductor - 1, 2LL * degree_ - 2);
        powers_.resize(static_cast<std::size_t>(max_exp) + 1);
        for (int j = 0; j < degree_ && j <= max_exp; ++j) {
            powers_[j].assign(degree_, Integer(0));
            powers_[j][j] = 1;
        }
        for (long long e = degree_; e <= max_exp; ++e) {
            const auto& prev = powers_[e - 1];
            std::vector<Integer> cur(degree_);
            for (int j = degree_ - 1; j >= 1; --j) cur[j] = prev[j - 1];
            const Integer& overflow = prev[degree_ - 1];
            if (overflow != 0)
                for (int j = 0; j < degree_; ++j) cur[j] -= overflow * phi[j];
            powers_[e] = std::move(cur);
        }
    }

    int conductor_;
    int degree_;
    std::vector<std::vector<Integer>> powers_;
};

}  // namespace detail

class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coords_(1) {}
    explicit Cyclotomic(const Rational& value) : conductor_(1), coords_{value} {}

    static Cyclotomic zero(int conductor) {
        Cyclotomic x;
        x.conductor_ = conductor;
        x.coords_.assign(detail::FieldTable::get(conductor).degree(), Rational(0));
        return x;
    }

    static Cyclotomic root(int conductor, long long exponent) {
        Cyclotomic x = zero(conductor);
        x.add_root_multiple(exponent, Rational(1));
        return x;
    }

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t j = 1; j < coords_.size(); ++j)
            if (coords_[j] != 0) return false;
        return true;
    }

    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("rational_value: element is irrational");
        return coords_[0];
    }

    // this += scale * zeta^exponent, exponent reduced mod the conductor
    void add_root_multiple(long long exponent, const Rational& scale) {
        if (scale == 0) return;
        long long e = exponent % conductor_;
        if (e < 0) e += conductor_;
        if (e < static_cast<long long>(coords_.size())) {
            coords_[static_cast<std::size_t>(e)] += scale;
            return;
        }
        const auto& row = detail::FieldTable::get(conductor_).power(e);
        for (std::size_t j = 0; j < coords_.size(); ++j)
            if (row[j] != 0) coords_[j] += scale * row[j];
    }

    void add_rational(const Rational& value) { coords_[0] += value; }

    Cyclotomic lifted(int conductor) const {
        if (conductor == conductor_) return *this;
        if (conductor < conductor_ || conductor % conductor_ != 0)
            throw std::invalid_argument("lifted: target conductor must be a multiple");
        Cyclotomic out = zero(conductor);
        const long long step = conductor / conductor_;
        for (std::size_t j = 0; j < coords_.size(); ++j)
            if (coords_[j] != 0) out.add_root_multiple(step * static_cast<long long>(j), coords_[j]);
        return out;
    }

    Cyclotomic conj() const {
        Cyclotomic out = zero(conductor_);
        for (std::size_t j = 0; j < coords_.size(); ++j)
            if (coords_[j] != 0) out.add_root_multiple(-static_cast<long long>(j), coords_[j]);
        return out;
    }

    Cyclotomic& operator+=(const Cyclotomic& rhs) {
        if (rhs.conductor_ != conductor_) {
            const int m = static_cast<int>(std::lcm<long long>(conductor_, rhs.conductor_));
            *this = lifted(m);
            return *this += rhs.lifted(m);
        }
        for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] += rhs.coords_[j];
        return *this;
    }

    Cyclotomic& operator-=(const Cyclotomic& rhs) {
        if (rhs.conductor_ != conductor_) {
            const int m = static_cast<int>(std::lcm<long long>(conductor_, rhs.conductor_));
            *this = lifted(m);
            return *this -= rhs.lifted(m);
        }
        for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] -= rhs.coords_[j];
        return *this;
    }

    Cyclotomic& operator*=(const Cyclotomic& rhs) {
        if (rhs.conductor_ != conductor_) {
            const int m = static_cast<int>(std::lcm<long long>(conductor_, rhs.conductor_));
            *this = lifted(m);
            return *this *= rhs.lifted(m);
        }
        const auto& ft = detail::FieldTable::get(conductor_);
        const int d = ft.degree();
        std::vector<Rational> conv(2 * d - 1);
        for (int i = 0; i < d; ++i) {
            if (coords_[i] == 0) continue;
            for (int j = 0; j < d; ++j) {
                if (rhs.coords_[j] == 0) continue;
                conv[i + j] += coords_[i] * rhs.coords_[j];
            }
        }
        std::vector<Rational> out(conv.begin(), conv.begin() + d);
        for (int e = d; e <= 2 * d - 2; ++e) {
            if (conv[e] == 0) continue;
            const auto& row = ft.power(e);
            for (int j = 0; j < d; ++j)
                if (row[j] != 0) out[j] += conv[e] * row[j];
        }
        coords_ = std::move(out);
        return *this;
    }

    Cyclotomic& operator*=(const Rational& scale) {
        for (auto& c : coords_) c *= scale;
        return *this;
    }

    Cyclotomic operator-() const {
        Cyclotomic out = *this;
        for (auto& c : out.coords_) c = -c;
        return out;
    }

    std::complex<double> embed(int digits = 15) const {
        if (digits < 1 || digits > 15)
            throw std::invalid_argument("embed: supported precision is 1..15 digits");
        return embed_at(1);
    }

    // substitute zeta_N -> exp(2 pi i r / N); r coprime to N picks a
    // Galois conjugate embedding
    std::complex<double> embed_at(long long r) const {
        long double re = 0, im = 0;
        constexpr long double two_pi = 6.283185307179586476925286766559L;
        for (std::size_t j = 0; j < coords_.size(); ++j) {
            if (coords_[j] == 0) continue;
            long long e = (r * static_cast<long long>(j)) % conductor_;
            if (e < 0) e += conductor_;
            const long double ang = two_pi * static_cast<long double>(e) / conductor_;
            const long double c = static_cast<long double>(coords_[j].get_d());
            re += c * cosl(ang);
            im += c * sinl(ang);
        }
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor_ == b.conductor_) return a.coords_ == b.coords_;
        const int m = static_cast<int>(std::lcm<long long>(a.conductor_, b.conductor_));
        return a.lifted(m).coords_ == b.lifted(m).coords_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

private:
    int conductor_;
    std::vector<Rational> coords_;
};

inline Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
inline Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
inline Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
inline Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
inline Cyclotomic operator*(const Rational& s, Cyclotomic a) { return a *= s; }

inline std::string to_string(const Cyclotomic& x) {
    std::string out = "[";
    for (std::size_t j = 0; j < x.coords().size(); ++j) {
        if (j) out += ", ";
        out += to_string(x.coords()[j]);
    }
    out += "] @ zeta_" + std::to_string(x.conductor());
    return out;
}

// sin(pi a / b), exact in Q(zeta_M) with M = lcm(4, 2b)
inline Cyclotomic sin_pi_rational(long long a, long long b) {
    if (b < 1) throw std::invalid_argument("sin_pi_rational: b must be positive");
    const long long m = std::lcm<long long>(4, 2 * b);
    const long long t = m / (2 * b);
    Cyclotomic x = Cyclotomic::zero(static_cast<int>(m));
    const Rational half = make_rational(1, 2);
    x.add_root_multiple(m / 4 + a * t, -half);
    x.add_root_multiple(m / 4 - a * t, half);
    return x;
}

// cos(pi a / b), exact in Q(zeta_M) with M = lcm(4, 2b)
inline Cyclotomic cos_pi_rational(long long a, long long b) {
    if (b < 1) throw std::invalid_argument("cos_pi_rational: b must be positive");
    const long long m = std::lcm<long long>(4, 2 * b);
    const long long t = m / (2 * b);
    Cyclotomic x = Cyclotomic::zero(static_cast<int>(m));
    const Rational half = make_rational(1, 2);
    x.add_root_multiple(a * t, half);
    x.add_root_multiple(-a * t, half);
    return x;
}

enum class LabelFilter { All, Odd, Even };

// sum of cos(pi lambda delta / (4 rho)) over labels lambda in 1..4rho-1
// restricted by the filter; always an integer for delta in the admitted
// window [2 - 4rho, 8rho - 2]
inline Integer cos_sum(int rho, long long delta, LabelFilter filter) {
    if (rho < 2) throw std::invalid_argument("cos_sum: rho must be at least 2");
    if (delta < 2 - 4LL * rho || delta > 8LL * rho - 2)
        throw std::out_of_range("cos_sum: delta outside [2-4rho, 8rho-2]");
    const int conductor = 8 * rho;
    Cyclotomic acc = Cyclotomic::zero(conductor);
    const Rational half = make_rational(1, 2);
    const int first = (filter == LabelFilter::Even) ? 2 : 1;
    const int last = (filter == LabelFilter::Even) ? 4 * rho - 2 : 4 * rho - 1;
    const int step = (filter == LabelFilter::All) ? 1 : 2;
    for (int lam = first; lam <= last; lam += step) {
        acc.add_root_multiple(lam * delta, half);
        acc.add_root_multiple(-lam * delta, half);
    }
    if (!acc.is_rational()) throw std::logic_error("cos_sum: sum is not rational");
    const Rational value = acc.rational_value();
    if (!is_integer(value)) throw std::logic_error("cos_sum: sum is not an integer");
    return value.get_num();
}

}  // namespace su2mod
