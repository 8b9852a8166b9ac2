#pragma once

// Transverse Dirichlet modes chi_j(u) = sqrt(2/d) sin(pi j u / d), thresholds
// E_j = (pi j / d)^2, and the effective coupling functions entering the
// coupled-channel Hamiltonian:
//   b(s,u)   = (1 + u*gamma(s))^{-2}
//   V(s,u)   = -b*gamma^2/4 + b^{3/2} u gamma''/2 - (5/4) b^2 u^2 gamma'^2
//   V0(s)    = V(s,0) = -gamma(s)^2/4
// All are complex-analytic in s; u stays real and is integrated by
// Gauss-Legendre on (0,d).

#include <lapacke.h>

#include "wgres/curvature.hpp"

namespace wgres {

// Golub-Welsch nodes/weights on (lo, hi).
inline void gauss_legendre(int n, Real lo, Real hi, VecR& x, VecR& w) {
  std::vector<Real> diag(n, 0.0), off(std::max(0, n - 1));
  for (int i = 1; i < n; ++i)
    off[i - 1] = i / std::sqrt(4.0 * i * i - 1.0);
  MatR z(n, n);
  lapack_int info = LAPACKE_dstev(LAPACK_COL_MAJOR, 'V', n, diag.data(),
                                  off.data(), z.data(), n);
  if (info != 0) throw ComputeError("dstev failed in gauss_legendre");
  x.resize(n);
  w.resize(n);
  const Real half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
  for (int i = 0; i < n; ++i) {
    x[i] = mid + half * diag[i];
    w[i] = 2.0 * half * z(0, i) * z(0, i);
  }
}

inline Real mode_energy(int j, Real d) {
  if (j < 1 || d <= 0) throw PreconditionError("mode_energy: j>=1, d>0");
  const Real k = pi * j / d;
  return k * k;
}

inline Real mode_function(int j, Real d, Real u) {
  if (u < 0 || u > d) throw PreconditionError("mode_function: u in [0,d]");
  return std::sqrt(2.0 / d) * std::sin(pi * j * u / d);
}

struct ChannelBasis {
  Real d = 0.1;
  int K = 5;
  VecR u_nodes, u_weights;      // Gauss-Legendre on (0,d)
  MatR chi;                     // chi(j-1, alpha) = chi_j(u_alpha)

  static ChannelBasis build(Real d, int K, int u_node_count = 64) {
    if (K < 1) throw ConfigError("channels: K >= 1");
    ChannelBasis b;
    b.d = d;
    b.K = K;
    gauss_legendre(u_node_count, 0.0, d, b.u_nodes, b.u_weights);
    b.chi.resize(K, u_node_count);
    for (int j = 1; j <= K; ++j)
      for (int al = 0; al < u_node_count; ++al)
        b.chi(j - 1, al) = mode_function(j, d, b.u_nodes[al]);
    return b;
  }

  Real threshold(int j) const { return mode_energy(j, d); }

  Real orthonormality_defect() const {
    Real worst = 0.0;
    for (int j = 0; j < K; ++j)
      for (int k = j; k < K; ++k) {
        Real s = 0;
        for (int al = 0; al < u_nodes.size(); ++al)
          s += u_weights[al] * chi(j, al) * chi(k, al);
        worst = std::max(worst, std::abs(s - (j == k ? 1.0 : 0.0)));
      }
    return worst;
  }
};

// b and V at complex s, real u. pow uses the principal branch; the strip
// validation keeps |u*gamma| away from -1 on the real axis and the contour
// clearance does so off it.
inline Complex kinetic_factor(const CurvatureProfile& p, Complex s, Real u) {
  const Complex g = p.eval(s, 0);
  const Complex q = 1.0 + u * g;
  if (std::abs(q) < 0.05)
    throw PoleProximityError("kinetic factor near degenerate 1+u*gamma");
  return 1.0 / (q * q);
}

inline Complex potential_total(const CurvatureProfile& p, Complex s, Real u,
                               Real /*d*/) {
  if (p.is_zero()) return Complex(0, 0);
  const Complex g = p.eval(s, 0);
  const Complex g1 = p.eval(s, 1);
  const Complex g2 = p.eval(s, 2);
  const Complex q = 1.0 + u * g;
  if (std::abs(q) < 0.05)
    throw PoleProximityError("potential near degenerate 1+u*gamma");
  const Complex b = 1.0 / (q * q);
  const Complex b32 = std::pow(b, 1.5);
  return -0.25 * b * g * g + 0.5 * b32 * u * g2 -
         1.25 * b * b * u * u * g1 * g1;
}

inline Complex potential_v0(const CurvatureProfile& p, Complex s) {
  const Complex g = p.eval(s, 0);
  return -0.25 * g * g;
}

enum class CouplingKind { b_minus_1, V_minus_V0 };

struct EffectiveCouplings {
  CurvatureProfile profile;
  ChannelBasis basis;

  static EffectiveCouplings build(const CurvatureProfile& p,
                                  const ChannelBasis& b) {
    return EffectiveCouplings{p, b};
  }

  Complex v0(Complex s) const { return potential_v0(profile, s); }

  // <chi_k, g(s,.) chi_l> with g = b-1 or V-V0; 1-based channel indices.
  Complex coupling(CouplingKind kind, int k, int l, Complex s) const {
    if (k < 1 || k > basis.K || l < 1 || l > basis.K)
      throw PreconditionError("channel_coupling: 1 <= k,l <= K");
    if (profile.is_zero()) return Complex(0, 0);
    return quadrature(kind, k, l, s, basis.u_nodes, basis.u_weights,
                      basis.chi);
  }

  // Relative quadrature error estimate against an independent lower-order rule.
  Real quadrature_error_estimate(CouplingKind kind, int k, int l,
                                 Complex s) const {
    if (profile.is_zero()) return 0.0;
    VecR xn, wn;
    gauss_legendre(std::max(8, static_cast<int>(basis.u_nodes.size()) * 3 / 4),
                   0.0, basis.d, xn, wn);
    MatR chi_n(basis.K, xn.size());
    for (int j = 1; j <= basis.K; ++j)
      for (int al = 0; al < xn.size(); ++al)
        chi_n(j - 1, al) = mode_function(j, basis.d, xn[al]);
    const Complex fine = coupling(kind, k, l, s);
    const Complex coarse = quadrature(kind, k, l, s, xn, wn, chi_n);
    const Real scale = std::max(std::abs(fine), 1e-300);
    return std::abs(fine - coarse) / scale;
  }

  Complex coupling_checked(CouplingKind kind, int k, int l, Complex s) const {
    const Real err = quadrature_error_estimate(kind, k, l, s);
    if (err > 1e-10)
      throw ComputeError("channel coupling quadrature degeneracy: est. rel. error " +
                         fmt_g17(err));
    return coupling(kind, k, l, s);
  }

 private:
  Complex quadrature(CouplingKind kind, int k, int l, Complex s, const VecR& x,
                     const VecR& w, const MatR& chi) const {
    const Complex g = profile.eval(s, 0);
    const Complex g1 = profile.eval(s, 1);
    const Complex g2 = profile.eval(s, 2);
    const Complex v0 = -0.25 * g * g;
    Complex acc(0, 0);
    for (int al = 0; al < x.size(); ++al) {
      const Real u = x[al];
      const Complex q = 1.0 + u * g;
      if (std::abs(q) < 0.05)
        throw PoleProximityError("coupling quadrature near 1+u*gamma = 0");
      const Complex b = 1.0 / (q * q);
      Complex val;
      if (kind == CouplingKind::b_minus_1) {
        val = b - 1.0;
      } else {
        const Complex b32 = std::pow(b, 1.5);
        val = -0.25 * b * g * g + 0.5 * b32 * u * g2 -
              1.25 * b * b * u * u * g1 * g1 - v0;
      }
      acc += w[al] * chi(k - 1, al) * chi(l - 1, al) * val;
    }
    return acc;
  }
};

}  // namespace wgres
