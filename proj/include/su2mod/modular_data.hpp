#pragma once

// Level-k modular data over the character basis: rational T phase
// exponents, exact unnormalized S entries sin(pi l m / n) with n = k + 2,
// label folding, and the exact commutation tests an integer coefficient
// matrix must pass to be a physical invariant. Labels run over 1..n-1.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "su2mod/cyclotomic.hpp"

namespace su2mod {

// integer matrix indexed by labels 1..n-1 on both sides
struct InvariantMatrix {
    int n = 0;
    std::vector<long long> entries;  // row-major

    InvariantMatrix() = default;
    explicit InvariantMatrix(int n_in) : n(n_in) {
        if (n < 3) throw std::invalid_argument("InvariantMatrix: n must be at least 3");
        entries.assign(static_cast<std::size_t>(n - 1) * (n - 1), 0);
    }

    static InvariantMatrix identity(int n_in) {
        InvariantMatrix m(n_in);
        for (int l = 1; l < n_in; ++l) m.at(l, l) = 1;
        return m;
    }

    long long& at(int l, int m) { return entries[index(l, m)]; }
    long long at(int l, int m) const { return entries[index(l, m)]; }

    bool is_nonnegative() const {
        for (const auto v : entries)
            if (v < 0) return false;
        return true;
    }

    // the vacuum sector appears exactly once
    bool is_normalized() const { return at(1, 1) == 1; }

    friend bool operator==(const InvariantMatrix&, const InvariantMatrix&) = default;

    friend InvariantMatrix operator+(const InvariantMatrix& a, const InvariantMatrix& b) {
        if (a.n != b.n) throw std::invalid_argument("InvariantMatrix: size mismatch");
        InvariantMatrix out = a;
        for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] += b.entries[i];
        return out;
    }

private:
    std::size_t index(int l, int m) const {
        if (l < 1 || l >= n || m < 1 || m >= n)
            throw std::out_of_range("InvariantMatrix: label outside 1..n-1");
        return static_cast<std::size_t>(l - 1) * (n - 1) + (m - 1);
    }
};

// sign 0 means the folded character vanishes
struct FoldResult {
    int sign = 0;
    int label = 0;
};

class ModularData {
public:
    explicit ModularData(int level) : level_(level), n_(level + 2) {
        if (level < 1) throw std::invalid_argument("ModularData: level must be positive");
        t_exp_.reserve(n_ - 1);
        for (int lam = 1; lam < n_; ++lam)
            t_exp_.push_back(mod_one(
                make_rational(static_cast<long>(lam) * lam, 4L * n_) - make_rational(1, 8)));
        s_.reserve(static_cast<std::size_t>(n_ - 1) * (n_ - 1));
        for (int l = 1; l < n_; ++l)
            for (int m = 1; m < n_; ++m)
                s_.push_back(l <= m ? sin_pi_rational(static_cast<long long>(l) * m, n_)
                                    : s_entry(m, l));
        verify_construction();
    }

    int level() const { return level_; }
    int n() const { return n_; }
    int period() const { return 2 * n_; }

    // t phase exponent (lambda^2 / (4n) - 1/8) mod 1
    const Rational& t_exponent(int label) const {
        check_label(label);
        return t_exp_[static_cast<std::size_t>(label - 1)];
    }

    // unnormalized S entry sin(pi l m / n) in Q(zeta_{lcm(4, 2n)})
    const Cyclotomic& s_entry(int l, int m) const {
        check_label(l);
        check_label(m);
        return s_[static_cast<std::size_t>(l - 1) * (n_ - 1) + (m - 1)];
    }

    // extend a label 2n-periodically with the sign of its character
    FoldResult fold(long long lambda) const {
        long long r = lambda % (2 * n_);
        if (r < 0) r += 2 * n_;
        if (r == 0 || r == n_) return {0, 0};
        if (r < n_) return {1, static_cast<int>(r)};
        return {-1, static_cast<int>(2 * n_ - r)};
    }

    // T commutation reduces to the congruence l^2 = m^2 (mod 4n) on the
    // support of the matrix
    bool t_commutes(const InvariantMatrix& m) const {
        check_matrix(m);
        for (int l = 1; l < n_; ++l)
            for (int mu = 1; mu < n_; ++mu) {
                if (m.at(l, mu) == 0) continue;
                const long long diff =
                    static_cast<long long>(l) * l - static_cast<long long>(mu) * mu;
                if (diff % (4LL * n_) != 0) return false;
            }
        return true;
    }

    // Exact test of sHat * M * sHat = (n/2) M. Each product of two sine
    // entries is expanded by the product-to-sum identity
    //   sin(pi a / n) sin(pi b / n)
    //     = (cos(pi (a - b) / n) - cos(pi (a + b) / n)) / 2,
    // so every accumulation lands in Q(zeta_{2n}) as a two-term sum and no
    // generic polynomial multiplication is needed.
    bool s_commutes(const InvariantMatrix& m) const {
        check_matrix(m);
        struct Term {
            int a, b;
            long long v;
        };
        std::vector<Term> support;
        for (int a = 1; a < n_; ++a)
            for (int b = 1; b < n_; ++b)
                if (m.at(a, b) != 0) support.push_back({a, b, m.at(a, b)});

        const Rational quarter = make_rational(1, 4);
        const Rational minus_half_n = make_rational(-n_, 2);
        for (int l = 1; l < n_; ++l)
            for (int mu = 1; mu < n_; ++mu) {
                Cyclotomic acc = Cyclotomic::zero(2 * n_);
                for (const auto& t : support) {
                    const long long d = static_cast<long long>(l) * t.a
                                        - static_cast<long long>(t.b) * mu;
                    const long long s = static_cast<long long>(l) * t.a
                                        + static_cast<long long>(t.b) * mu;
                    const Rational w = quarter * static_cast<long>(t.v);
                    acc.add_root_multiple(d, w);
                    acc.add_root_multiple(-d, w);
                    acc.add_root_multiple(s, -w);
                    acc.add_root_multiple(-s, -w);
                }
                if (m.at(l, mu) != 0)
                    acc.add_rational(minus_half_n * static_cast<long>(m.at(l, mu)));
                if (!acc.is_zero()) return false;
            }
        return true;
    }

private:
    void check_label(int label) const {
        if (label < 1 || label >= n_)
            throw std::out_of_range("ModularData: label outside 1..n-1");
    }

    void check_matrix(const InvariantMatrix& m) const {
        if (m.n != n_) throw std::invalid_argument("ModularData: matrix size mismatch");
    }

    void verify_construction() const {
        for (int lam = 1; lam < n_; ++lam) {
            const auto v = s_entry(1, lam).embed(12);
            if (!(v.real() > 0) || std::abs(v.imag()) > 1e-9)
                throw std::logic_error("ModularData: first S row is not positive");
        }
        if (!s_commutes(InvariantMatrix::identity(n_)))
            throw std::logic_error("ModularData: sHat squared check failed");
    }

    int level_;
    int n_;
    std::vector<Rational> t_exp_;
    std::vector<Cyclotomic> s_;
};

}  // namespace su2mod
