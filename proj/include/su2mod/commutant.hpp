#pragma once

// The commutant of the modular data inside integer matrices: an exact
// rational nullspace computation yields a primitive integer basis, and a
// bounded search over that basis enumerates the physical invariants
// (nonnegative, vacuum-normalized). Classification tags each invariant
// with its series label.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "su2mod/modular_data.hpp"

namespace su2mod {

namespace detail {

// reduced row echelon form state over the rationals, built incrementally
class RrefAccumulator {
public:
    explicit RrefAccumulator(int width) : width_(width) {}

    void insert(std::vector<Rational> row) {
        for (std::size_t p = 0; p < rows_.size(); ++p) {
            const Rational f = row[pivot_cols_[p]];
            if (f == 0) continue;
            for (int j = 0; j < width_; ++j) row[j] -= f * rows_[p][j];
        }
        int lead = -1;
        for (int j = 0; j < width_; ++j)
            if (row[j] != 0) {
                lead = j;
                break;
            }
        if (lead < 0) return;
        const Rational inv = row[lead];
        for (int j = lead; j < width_; ++j) row[j] /= inv;
        for (std::size_t p = 0; p < rows_.size(); ++p) {
            const Rational f = rows_[p][lead];
            if (f == 0) continue;
            for (int j = 0; j < width_; ++j) rows_[p][j] -= f * row[j];
        }
        rows_.push_back(std::move(row));
        pivot_cols_.push_back(lead);
    }

    int rank() const { return static_cast<int>(rows_.size()); }

    // nullspace vectors, one per free column in ascending column order,
    // with the free coordinate set to 1
    std::vector<std::vector<Rational>> nullspace() const {
        std::vector<bool> is_pivot(width_, false);
        for (int c : pivot_cols_) is_pivot[c] = true;
        std::vector<std::vector<Rational>> out;
        for (int f = 0; f < width_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<Rational> vec(width_);
            vec[f] = 1;
            for (std::size_t p = 0; p < rows_.size(); ++p)
                vec[pivot_cols_[p]] = -rows_[p][f];
            out.push_back(std::move(vec));
        }
        return out;
    }

private:
    int width_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> pivot_cols_;
};

inline long long to_long_long(const Integer& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("commutant: entry exceeds 64 bits");
    return v.get_si();
}

}  // namespace detail

// Basis of integer matrices commuting with the modular data, in primitive
// form (coprime entries, first nonzero entry positive). The T condition
// first restricts the support to label pairs with l^2 = m^2 (mod 4n);
// the S condition is then expanded coordinate by coordinate over
// Q(zeta_{2n}) into rational linear equations.
inline std::vector<InvariantMatrix> commutant_basis(const ModularData& md) {
    const int n = md.n();
    const int dim = n - 1;
    const long long mod = 4LL * n;

    std::vector<std::pair<int, int>> unknowns;
    std::vector<int> index(static_cast<std::size_t>(dim) * dim, -1);
    for (int a = 1; a <= dim; ++a)
        for (int b = 1; b <= dim; ++b) {
            const long long diff = static_cast<long long>(a) * a - static_cast<long long>(b) * b;
            if (diff % mod != 0) continue;
            index[static_cast<std::size_t>(a - 1) * dim + (b - 1)] =
                static_cast<int>(unknowns.size());
            unknowns.emplace_back(a, b);
        }
    const int width = static_cast<int>(unknowns.size());

    const auto& ft = detail::FieldTable::get(2 * n);
    const int deg = ft.degree();
    detail::RrefAccumulator rref(width);

    const Rational quarter = make_rational(1, 4);
    const Rational minus_half_n = make_rational(-n, 2);
    std::vector<std::vector<Rational>> coeff(width);

    auto add_cos = [&](std::vector<Rational>& v, long long x, const Rational& w) {
        for (int sign : {1, -1}) {
            long long e = (sign * x) % (2 * n);
            if (e < 0) e += 2 * n;
            if (e < deg) {
                v[static_cast<std::size_t>(e)] += w;
                continue;
            }
            const auto& row = ft.power(e);
            for (int j = 0; j < deg; ++j)
                if (row[j] != 0) v[j] += w * row[j];
        }
    };

    for (int l = 1; l <= dim; ++l)
        for (int mu = 1; mu <= dim; ++mu) {
            for (int t = 0; t < width; ++t) {
                coeff[t].assign(deg, Rational(0));
                const auto [a, b] = unknowns[t];
                const long long d =
                    static_cast<long long>(l) * a - static_cast<long long>(b) * mu;
                const long long s =
                    static_cast<long long>(l) * a + static_cast<long long>(b) * mu;
                add_cos(coeff[t], d, quarter);
                add_cos(coeff[t], s, -quarter);
            }
            const int self = index[static_cast<std::size_t>(l - 1) * dim + (mu - 1)];
            if (self >= 0) coeff[self][0] += minus_half_n;
            for (int r = 0; r < deg; ++r) {
                bool nonzero = false;
                std::vector<Rational> row(width);
                for (int t = 0; t < width; ++t) {
                    row[t] = coeff[t][static_cast<std::size_t>(r)];
                    nonzero = nonzero || row[t] != 0;
                }
                if (nonzero) rref.insert(std::move(row));
            }
        }

    std::vector<InvariantMatrix> basis;
    for (const auto& vec : rref.nullspace()) {
        Integer den_lcm = 1;
        for (const auto& v : vec)
            if (v != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
        std::vector<Integer> scaled(vec.size());
        Integer gcd = 0;
        for (std::size_t t = 0; t < vec.size(); ++t) {
            const Rational s = vec[t] * Rational(den_lcm);
            scaled[t] = s.get_num();
            mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled[t].get_mpz_t());
        }
        if (gcd == 0) continue;
        int sign = 0;
        for (const auto& s : scaled)
            if (s != 0) {
                sign = (s > 0) ? 1 : -1;
                break;
            }
        InvariantMatrix m(n);
        for (std::size_t t = 0; t < vec.size(); ++t) {
            const auto [a, b] = unknowns[t];
            m.at(a, b) = detail::to_long_long(sign * scaled[t] / gcd);
        }
        basis.push_back(std::move(m));
    }
    return basis;
}

struct EnumerationResult {
    std::vector<InvariantMatrix> invariants;
    // true when some accepted invariant uses a coefficient of maximal
    // magnitude, so a larger bound might reveal further invariants
    bool bound_touched = false;
};

enum class AdeType { A, DOdd, DEven, Exceptional };

struct AdeLabel {
    AdeType type = AdeType::A;
    int n = 0;

    std::string str() const {
        switch (type) {
            case AdeType::A: return "A";
            case AdeType::DOdd: return "D-odd";
            case AdeType::DEven: return "D-even";
            case AdeType::Exceptional: return "Exceptional(" + std::to_string(n) + ")";
        }
        throw std::logic_error("AdeLabel: bad type");
    }
};

// the nontrivial invariant present for n = 4 rho: odd labels on the
// diagonal, even labels paired with their reflection
inline InvariantMatrix d_odd_invariant(int rho) {
    if (rho < 2) throw std::invalid_argument("d_odd_invariant: rho must be at least 2");
    const int n = 4 * rho;
    InvariantMatrix m(n);
    for (int l = 1; l < n; l += 2) m.at(l, l) = 1;
    for (int l = 2; l <= n - 2; l += 2) m.at(l, n - l) = 1;
    return m;
}

// the nontrivial invariant present for n = 2 mod 4: odd labels paired
// with their reflection, the fixed middle label doubled
inline InvariantMatrix d_even_invariant(int n) {
    if (n < 6 || n % 4 != 2) throw std::invalid_argument("d_even_invariant: n must be 2 mod 4");
    InvariantMatrix m(n);
    for (int l = 1; l < n / 2; l += 2) {
        m.at(l, l) = 1;
        m.at(l, n - l) = 1;
        m.at(n - l, l) = 1;
        m.at(n - l, n - l) = 1;
    }
    m.at(n / 2, n / 2) = 2;
    return m;
}

inline AdeLabel ade_classify(const InvariantMatrix& m) {
    if (!m.is_nonnegative() || !m.is_normalized())
        throw std::invalid_argument("ade_classify: matrix is not a physical invariant");
    const int n = m.n;
    if (m == InvariantMatrix::identity(n)) return {AdeType::A, n};
    if (n % 4 == 0 && n >= 8 && m == d_odd_invariant(n / 4)) return {AdeType::DOdd, n};
    if (n % 4 == 2 && n >= 6 && m == d_even_invariant(n)) return {AdeType::DEven, n};
    return {AdeType::Exceptional, n};
}

// All physical invariants reachable as integer combinations of the
// commutant basis with coefficients in [-bound, bound]: entry (1,1) must
// equal 1 and all entries must be nonnegative. Every accepted matrix is
// re-verified against both exact commutation tests. Results are sorted by
// series label and then lexicographically.
inline EnumerationResult enumerate_invariants(const ModularData& md, int bound = 3) {
    if (bound < 1) throw std::invalid_argument("enumerate_invariants: bound must be positive");
    const auto basis = commutant_basis(md);
    const int d = static_cast<int>(basis.size());
    const double radix = 2.0 * bound + 1;
    if (d * std::log(radix) > std::log(1e8))
        throw std::runtime_error("enumerate_invariants: search space too large");

    std::vector<long long> vacuum(d);
    for (int i = 0; i < d; ++i) vacuum[i] = basis[i].at(1, 1);

    EnumerationResult result;
    std::vector<int> c(d, -bound);
    const int n = md.n();
    while (true) {
        long long v = 0;
        for (int i = 0; i < d; ++i) v += c[i] * vacuum[i];
        if (v == 1) {
            InvariantMatrix m(n);
            for (int i = 0; i < d; ++i) {
                if (c[i] == 0) continue;
                for (std::size_t e = 0; e < m.entries.size(); ++e)
                    m.entries[e] += c[i] * basis[i].entries[e];
            }
            if (m.is_nonnegative() && md.t_commutes(m) && md.s_commutes(m)) {
                int peak = 0;
                for (int i = 0; i < d; ++i) peak = std::max(peak, std::abs(c[i]));
                result.bound_touched = result.bound_touched || peak == bound;
                result.invariants.push_back(std::move(m));
            }
        }
        int pos = 0;
        while (pos < d && c[pos] == bound) c[pos++] = -bound;
        if (pos == d) break;
        ++c[pos];
    }

    auto rank = [](const InvariantMatrix& m) {
        switch (ade_classify(m).type) {
            case AdeType::A: return 0;
            case AdeType::DOdd:
            case AdeType::DEven: return 1;
            case AdeType::Exceptional: return 2;
        }
        return 3;
    };
    std::sort(result.invariants.begin(), result.invariants.end(),
              [&](const InvariantMatrix& a, const InvariantMatrix& b) {
                  const int ra = rank(a), rb = rank(b);
                  if (ra != rb) return ra < rb;
                  return a.entries < b.entries;
              });
    result.invariants.erase(std::unique(result.invariants.begin(), result.invariants.end()),
                            result.invariants.end());
    return result;
}

}  // namespace su2mod
