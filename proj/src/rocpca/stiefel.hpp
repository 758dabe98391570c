#pragma once

#include <optional>

#include "rocpca/common.hpp"
#include "rocpca/config.hpp"

namespace rocpca {

// Euclidean gradient of f(V) = 0.5 ||X V - J||_F^2: X^T (X V - J).
Matrix euclidean_gradient(const Matrix& x, const Matrix& v, const Matrix& j);

// Tangent gradient under the canonical metric, computed as G - V G^T V.
// Equals (G V^T - V G^T) V whenever V^T V = I.
Matrix riemannian_gradient(const Matrix& g, const Matrix& v);

// Derivative of f along the Cayley curve at tau = 0:
// -0.5 ||G V^T - V G^T||_F^2, evaluated without the p x p skew factor.
double curve_derivative_at_zero(const Matrix& g, const Matrix& v);

// Cayley transport V(tau) = (I + tau/2 W)^-1 (I - tau/2 W) V with
// W = A1 A2^T. The fast path inverts a 2d x 2d system (needs 2d < p) and
// signals failure when that system is singular; the dense path solves the
// p x p system. cayley_step dispatches on 2d < p.
std::optional<Matrix> cayley_step_fast(const Matrix& v, const Matrix& a1,
                                       const Matrix& a2, double tau);
Matrix cayley_step_dense(const Matrix& v, const Matrix& a1, const Matrix& a2,
                         double tau);
std::optional<Matrix> cayley_step(const Matrix& v, const Matrix& a1,
                                  const Matrix& a2, double tau);

// Alternating Barzilai-Borwein step. Even k: tr(dV^T dV)/|tr(dV^T dG)|;
// odd k: |tr(dV^T dG)|/tr(dG^T dG). k = 0 or a degenerate denominator
// yields 0.5; otherwise the value is clamped to [1e-10, 1e10].
double bb_stepsize(const Matrix& delta_v, const Matrix& delta_grad, long long k);

struct LineSearchResult {
  Matrix v;
  double f = 0.0;
  double tau = 0.0;
  int backtracks = 0;
  bool accepted = false;
};

// Backtracks tau0 by factors of kappa until
// f(V(tau)) <= f_ref + rho * tau * fprime0, at most 60 times.
LineSearchResult nonmonotone_search(const Matrix& x, const Matrix& j,
                                    const Matrix& v, const Matrix& a1,
                                    const Matrix& a2, double f_ref,
                                    double fprime0, double tau0,
                                    const SolverConfig& cfg);

struct StiefelResult {
  Matrix v;
  double f = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Minimizes f over the Stiefel manifold from v0; returns the best-seen
// iterate, so result.f <= f(v0) always holds.
StiefelResult minimize_on_stiefel(const Matrix& x, const Matrix& j,
                                  const Matrix& v0, const SolverConfig& cfg);

}  // namespace rocpca
