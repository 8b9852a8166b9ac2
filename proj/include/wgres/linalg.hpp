#pragma once

// Dense linear algebra kernels behind the solver: LAPACK factorizations for
// the complex matrices (they get large), plus small utilities (DFT matrix,
// 2-norm estimation). Eigen is the container/expression layer.

#include <lapacke.h>

#include <memory>
#include <random>

#include "wgres/common.hpp"

extern "C" void openblas_set_num_threads(int);

namespace wgres {

inline void set_blas_threads(int n) { openblas_set_num_threads(n); }

inline lapack_complex_double* lp(Complex* p) {
  return reinterpret_cast<lapack_complex_double*>(p);
}
inline const lapack_complex_double* lp(const Complex* p) {
  return reinterpret_cast<const lapack_complex_double*>(p);
}

// LU factorization (zgetrf) with solve/inverse. Column-major throughout,
// matching Eigen's default storage.
class Lu {
 public:
  explicit Lu(MatC a) : a_(std::move(a)), piv_(a_.rows()) {
    const lapack_int n = static_cast<lapack_int>(a_.rows());
    if (a_.cols() != n) throw ComputeError("Lu: square matrix required");
    lapack_int info = LAPACKE_zgetrf(LAPACK_COL_MAJOR, n, n, lp(a_.data()), n,
                                     piv_.data());
    if (info != 0) throw ComputeError("zgetrf failed, info=" + std::to_string(info));
  }

  Eigen::Index size() const { return a_.rows(); }

  void solve_in_place(MatC& b) const {
    const lapack_int n = static_cast<lapack_int>(a_.rows());
    lapack_int info =
        LAPACKE_zgetrs(LAPACK_COL_MAJOR, 'N', n, static_cast<lapack_int>(b.cols()),
                       lp(a_.data()), n, piv_.data(), lp(b.data()), n);
    if (info != 0) throw ComputeError("zgetrs failed");
  }
  void solve_adjoint_in_place(MatC& b) const {
    const lapack_int n = static_cast<lapack_int>(a_.rows());
    lapack_int info =
        LAPACKE_zgetrs(LAPACK_COL_MAJOR, 'C', n, static_cast<lapack_int>(b.cols()),
                       lp(a_.data()), n, piv_.data(), lp(b.data()), n);
    if (info != 0) throw ComputeError("zgetrs failed");
  }
  VecC solve(const VecC& b) const {
    MatC x = b;
    solve_in_place(x);
    return x;
  }
  MatC inverse() const {
    MatC inv = a_;
    const lapack_int n = static_cast<lapack_int>(a_.rows());
    lapack_int info =
        LAPACKE_zgetri(LAPACK_COL_MAJOR, n, lp(inv.data()), n, piv_.data());
    if (info != 0) throw ComputeError("zgetri failed");
    return inv;
  }

 private:
  MatC a_;
  std::vector<lapack_int> piv_;
};

inline MatC dense_inverse(const MatC& a) { return Lu(a).inverse(); }

// Hermitian eigensolve (zheevd). Ascending eigenvalues.
inline void hermitian_eigen(const MatC& a, VecR& w, MatC& v) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  v = a;
  w.resize(n);
  lapack_int info =
      LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n, lp(v.data()), n, w.data());
  if (info != 0) throw ComputeError("zheevd failed");
}

// Real symmetric eigensolve (dsyevd).
inline void symmetric_eigen(const MatR& a, VecR& w, MatR& v) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  v = a;
  w.resize(n);
  lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, v.data(), n,
                                   w.data());
  if (info != 0) throw ComputeError("dsyevd failed");
}

// General complex eigenvalues (zgeev), optionally with right eigenvectors.
inline VecC general_eigenvalues(const MatC& a, MatC* right_vectors = nullptr) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  MatC work = a;
  VecC w(n);
  MatC vr;
  lapack_complex_double* vr_ptr = nullptr;
  if (right_vectors) {
    vr.resize(n, n);
    vr_ptr = lp(vr.data());
  }
  lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', right_vectors ? 'V' : 'N',
                                  n, lp(work.data()), n, lp(w.data()), nullptr, 1,
                                  vr_ptr, right_vectors ? n : 1);
  if (info != 0) throw ComputeError("zgeev failed");
  if (right_vectors) *right_vectors = std::move(vr);
  return w;
}

// Power iteration estimate of the spectral norm through matrix-vector
// callbacks (deterministic seed). Good to ~1e-3 relative, which is all the
// bound checks need; iters can be raised where tighter values matter.
template <class ApplyA, class ApplyAH>
Real norm2_estimate(Eigen::Index n, ApplyA&& apply, ApplyAH&& apply_adj,
                    int iters = 30, std::uint64_t seed = 0x5eed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<Real> g;
  VecC v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = Complex(g(rng), g(rng));
  v /= v.norm();
  Real s = 0;
  for (int it = 0; it < iters; ++it) {
    VecC w = apply(v);
    s = w.norm();
    if (s == 0) return 0;
    v = apply_adj(w);
    Real nv = v.norm();
    if (nv == 0) return s;
    v /= nv;
  }
  return s;
}

inline Real norm2_estimate(const MatC& a, int iters = 30,
                           std::uint64_t seed = 0x5eed) {
  return norm2_estimate(
      a.rows(), [&](const VecC& x) { return VecC(a * x); },
      [&](const VecC& x) { return VecC(a.adjoint() * x); }, iters, seed);
}

// Unitary DFT adapted to the midpoint grid p_i = -P + (i+1/2)h with dual
// frequencies s_k = pi*k/P, k = -N/2..N/2-1. Row k of F maps grid samples to
// the coefficient of e^{i s_k p}; F is unitary.
struct GridTransform {
  VecR s;   // dual nodes, ascending
  MatC f;   // forward transform
  MatC fh;  // adjoint (= inverse)

  static GridTransform build(Real half_width, Eigen::Index n) {
    GridTransform t;
    const Real h = 2.0 * half_width / static_cast<Real>(n);
    t.s.resize(n);
    t.f.resize(n, n);
    const Real norm = 1.0 / std::sqrt(static_cast<Real>(n));
    for (Eigen::Index k = 0; k < n; ++k) {
      const Real sk = pi * (static_cast<Real>(k) - static_cast<Real>(n) / 2.0) /
                      half_width;
      t.s[k] = sk;
      for (Eigen::Index j = 0; j < n; ++j) {
        const Real pj = -half_width + (static_cast<Real>(j) + 0.5) * h;
        t.f(k, j) = norm * std::exp(Complex(0.0, -sk * pj));
      }
    }
    t.fh = t.f.adjoint();
    return t;
  }
};

}  // namespace wgres
