#pragma once

#include "rocpca/common.hpp"
#include "rocpca/config.hpp"
#include "rocpca/threshold.hpp"

namespace rocpca {

enum class ProblemVariant {
  constrained_row,
  constrained_element,
  penalized_row,
  penalized_element,
};

bool is_constrained(ProblemVariant variant);
bool is_row_mode(ProblemVariant variant);

struct Problem {
  Matrix x;
  ProblemVariant variant = ProblemVariant::constrained_row;
  // Scalar rule for the penalized variants; constrained variants use the
  // quantile rules and ignore it.
  ThresholdRule rule = ThresholdRule::soft;
};

// Progressive outlier budget q(k) = max(target, round(2*total/(1+e^{nu k}))),
// nonincreasing from q(0) = total down to target.
struct CoolingSchedule {
  long long target_q = 0;
  double nu = 0.05;
  long long total = 0;
  long long at(long long k) const;
  // Smallest k with q(k) == target.
  long long settled_after() const;
};

// Full objective: 0.5||X V - 1 mu^T - S||_F^2 plus (eta/2)||S||_F^2 for
// constrained variants or the rule's penalty for penalized ones.
// Constrained variants reject S whose support exceeds the budget.
double objective(const Problem& problem, const SolverConfig& cfg, const Matrix& v,
                 const Vector& mu, const Matrix& s);

struct MuSResult {
  Vector mu;
  Matrix s;
  int iterations = 0;
  bool converged = false;
};

// Fixed-frame block update: iterates
//   S <- Theta((I - 11^T/n) X V + (11^T/n) S)
// to the tol_inner_s fixed point, then sets mu = (X V - S)^T 1 / n.
// budget overrides cfg.q for constrained variants (cooling); pass the
// target budget when cooling is done.
MuSResult update_mu_s(const Matrix& x, const Matrix& v_perp, const Matrix& s_init,
                      const Problem& problem, const SolverConfig& cfg,
                      long long budget);

// Top-r right singular vectors of X(I - V V^T), decreasing significance.
// When r exceeds the numerical rank of the projected data the remaining
// columns complete the basis of the complement's orthogonal span
// deterministically. Requires r <= p - d.
Matrix recover_pc_directions(const Matrix& x, const Matrix& v_perp, int r);

// Max-abs stationarity certificate at (v, mu): l-infinity norms of the
// centering and frame residuals of psi evaluated at the implicit
// (constrained) or configured (penalized) threshold level.
double stationarity_residual(const Problem& problem, const SolverConfig& cfg,
                             const Matrix& v, const Vector& mu);

// Multi-start alternating solver.
FitResult fit(const Problem& problem, const SolverConfig& cfg);

// r repeated rank-1 fits with deflation; v_hat columns are the
// sequentially recovered directions, remaining fields come from a final
// block update against the completed complement.
FitResult sequential_fit(const Problem& problem, const SolverConfig& cfg);

}  // namespace rocpca
