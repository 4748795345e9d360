#pragma once

// Sector data for the even part plus top-level module extension at level
// k = 4 rho - 2 (n = 4 rho): untwisted traces and supertraces, twisted
// traces, the resulting total partition function, and a numeric probe of
// the S action on the span of the sector characters.

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "su2mod/commutant.hpp"
#include "su2mod/modular_data.hpp"
#include "su2mod/numeric.hpp"
#include "su2mod/qseries.hpp"

namespace su2mod {

enum class SectorKind { Trace, Supertrace, Twisted, TwistedSigma };

// one sector character as an integer vector over the level-k character
// basis, labels 1..n-1
struct SectorCharacter {
    SectorKind kind;
    int index;  // module label i in 0..k
    std::vector<long long> coeffs;
};

// All 3 rho + 1 sectors: traces and supertraces of the rho untwisted
// modules (even i below k/2), traces of the rho - 1 twisted modules (odd
// i below k/2), and the two sectors supported on the middle twisted
// module i = k/2, whose sigma-composed trace has the same character.
inline std::vector<SectorCharacter> sector_inventory(int rho) {
    if (rho < 2) throw std::invalid_argument("sector_inventory: rho must be at least 2");
    const int k = 4 * rho - 2;
    const int n = 4 * rho;
    auto pair_vector = [&](int i, long long second) {
        std::vector<long long> v(n - 1, 0);
        v[i] = 1;                // label i + 1
        v[k - i] += second;      // label k - i + 1
        return v;
    };
    std::vector<SectorCharacter> out;
    for (int i = 0; i < 2 * rho - 1; i += 2)
        out.push_back({SectorKind::Trace, i, pair_vector(i, 1)});
    for (int i = 0; i < 2 * rho - 1; i += 2)
        out.push_back({SectorKind::Supertrace, i, pair_vector(i, -1)});
    for (int i = 1; i < 2 * rho - 1; i += 2)
        out.push_back({SectorKind::Twisted, i, pair_vector(i, 1)});
    std::vector<long long> middle(n - 1, 0);
    middle[2 * rho - 1] = 1;  // label 2 rho = k/2 + 1
    out.push_back({SectorKind::Twisted, 2 * rho - 1, middle});
    out.push_back({SectorKind::TwistedSigma, 2 * rho - 1, middle});
    return out;
}

struct SuperPartition {
    int rho = 0;
    InvariantMatrix matrix;
};

// total partition function sum_sectors |character|^2, as a coefficient
// matrix over chi_l chibar_m; it reproduces identity + d_odd_invariant
inline SuperPartition super_partition(int rho) {
    const auto sectors = sector_inventory(rho);
    const int n = 4 * rho;
    InvariantMatrix m(n);
    for (const auto& s : sectors)
        for (int l = 1; l < n; ++l) {
            if (s.coeffs[l - 1] == 0) continue;
            for (int mu = 1; mu < n; ++mu)
                m.at(l, mu) += s.coeffs[l - 1] * s.coeffs[mu - 1];
        }
    if (m != InvariantMatrix::identity(n) + d_odd_invariant(rho))
        throw std::logic_error("super_partition: unexpected coefficient matrix");
    return {rho, m};
}

struct InvarianceReport {
    bool combined_t = false, combined_s = false;
    bool identity_t = false, identity_s = false;
    bool reflection_t = false, reflection_s = false;

    bool t_invariant() const { return combined_t && identity_t && reflection_t; }
    bool s_invariant() const { return combined_s && identity_s && reflection_s; }
    bool pass() const { return t_invariant() && s_invariant(); }
};

// exact modular invariance of the total partition function and of its
// two summands separately
inline InvarianceReport check_super_invariance(int rho) {
    if (rho < 2) throw std::invalid_argument("check_super_invariance: rho must be at least 2");
    const ModularData md(4 * rho - 2);
    const InvariantMatrix id = InvariantMatrix::identity(4 * rho);
    const InvariantMatrix refl = d_odd_invariant(rho);
    const InvariantMatrix total = id + refl;
    InvarianceReport report;
    report.combined_t = md.t_commutes(total);
    report.combined_s = md.s_commutes(total);
    report.identity_t = md.t_commutes(id);
    report.identity_s = md.s_commutes(id);
    report.reflection_t = md.t_commutes(refl);
    report.reflection_s = md.s_commutes(refl);
    return report;
}

// numeric value of sum_{l,m} M_{lm} chi_l(tau) conj(chi_m(tau))
inline std::complex<double> evaluate_partition(const InvariantMatrix& m,
                                               std::complex<double> tau, int order) {
    const int level = m.n - 2;
    std::vector<std::complex<double>> chi(m.n - 1);
    for (int l = 1; l < m.n; ++l)
        chi[l - 1] = evaluate(affine_character(level, l - 1, order), tau).value;
    std::complex<double> acc = 0;
    for (int l = 1; l < m.n; ++l)
        for (int mu = 1; mu < m.n; ++mu) {
            if (m.at(l, mu) == 0) continue;
            acc += static_cast<double>(m.at(l, mu)) * chi[l - 1] * std::conj(chi[mu - 1]);
        }
    return acc;
}

struct UnitarityProbe {
    int span = 0;                  // dimension of the sector character span
    bool stable = false;           // span numerically closed under S
    double stability_residual = 0;
    double unitarity_defect = 0;   // max |R R^T - I| in the orthonormal basis
    Eigen::MatrixXd rep_matrix;    // S action on the orthonormalized sector basis
    double series_residual = -1;   // q-expansion cross-check; -1 when skipped
};

// Numerically represents S on the span of the distinct sector characters.
// The coefficient vectors are pairwise orthogonal, so rescaling each to
// unit length gives an orthonormal basis of the span; the defect then
// measures how far the represented S is from orthogonal. A positive
// `order` adds a series-level cross-check of the representation matrix at
// tau = 2i.
inline UnitarityProbe unitarity_probe(int rho, int order = 0, int precision = 10) {
    if (rho < 2) throw std::invalid_argument("unitarity_probe: rho must be at least 2");
    if (precision < 1 || precision > 14)
        throw std::invalid_argument("unitarity_probe: precision must lie in 1..14");
    const int n = 4 * rho;
    const int dim = n - 1;

    std::vector<std::vector<long long>> cols;
    for (const auto& s : sector_inventory(rho))
        if (std::find(cols.begin(), cols.end(), s.coeffs) == cols.end())
            cols.push_back(s.coeffs);

    UnitarityProbe probe;
    probe.span = static_cast<int>(cols.size());

    Eigen::MatrixXd v(dim, probe.span), vhat(dim, probe.span);
    for (int j = 0; j < probe.span; ++j) {
        for (int l = 0; l < dim; ++l) v(l, j) = static_cast<double>(cols[j][l]);
        vhat.col(j) = v.col(j) / v.col(j).norm();
    }

    const Eigen::MatrixXd s = numeric_s_matrix(n);
    const Eigen::MatrixXd sv = s * vhat;
    const Eigen::MatrixXd r = vhat.colPivHouseholderQr().solve(sv);
    probe.stability_residual = (vhat * r - sv).cwiseAbs().maxCoeff();
    probe.stable = probe.stability_residual < std::pow(10.0, -precision);
    probe.unitarity_defect =
        (r * r.transpose() - Eigen::MatrixXd::Identity(probe.span, probe.span))
            .cwiseAbs()
            .maxCoeff();
    probe.rep_matrix = r;

    if (order > 0) {
        // f_j(-1/tau) = sum_l R_raw(l,j) f_l(tau) for the raw integer
        // coefficient vectors, checked at tau = 2i against -1/tau = i/2
        const Eigen::MatrixXd r_raw = v.colPivHouseholderQr().solve(s * v);
        const int level = n - 2;
        const std::complex<double> tau(0, 2), stau(0, 0.5);
        Eigen::VectorXcd chi_tau(dim), chi_stau(dim);
        for (int l = 1; l <= dim; ++l) {
            const QSeries chi = affine_character(level, l - 1, order);
            chi_tau(l - 1) = evaluate(chi, tau).value;
            chi_stau(l - 1) = evaluate(chi, stau).value;
        }
        const Eigen::VectorXcd f_tau = v.transpose().cast<std::complex<double>>() * chi_tau;
        const Eigen::VectorXcd f_stau = v.transpose().cast<std::complex<double>>() * chi_stau;
        const Eigen::VectorXcd predicted =
            r_raw.transpose().cast<std::complex<double>>() * f_tau;
        probe.series_residual = (f_stau - predicted).cwiseAbs().maxCoeff();
    }
    return probe;
}

}  // namespace su2mod
