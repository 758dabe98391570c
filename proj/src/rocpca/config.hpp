#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rocpca/common.hpp"

namespace rocpca {

enum class OutlierMode { row, element };

enum class ThresholdRule { soft, hard, hard_ridge };

struct SolverConfig {
  int rank_r = 1;
  OutlierMode mode = OutlierMode::row;
  // Outlier budget for the constrained variants: rows (row mode) or
  // entries (element mode). 0 disables the outlier term.
  long long q = 0;
  double eta = 1e-3;
  // Penalty level for the penalized variants.
  double lambda = 0.0;
  double kappa = 0.1;
  double rho = 1e-3;
  int window_T = 10;
  double nu = 0.05;
  int m0 = 10;
  int n0 = 2;
  int m1 = 2;
  double tol_outer = 1e-6;
  double tol_inner_s = 1e-8;
  double tol_grad = 1e-6;
  double tol_rel_f = 1e-10;
  int max_outer = 200;
  int max_inner = 500;
  std::uint64_t seed = 0;
  // 0 means one worker per hardware thread. Results are identical for
  // every thread count.
  int threads = 1;
};

struct FitResult {
  Matrix v_hat;   // p x r principal directions, decreasing significance
  Matrix v_perp;  // p x d orthogonal-complement frame
  Vector mu;      // d intercept
  Matrix s;       // n x d outlier matrix
  std::vector<long long> flagged_rows;  // row mode support, ascending
  std::vector<std::pair<long long, long long>> flagged_elements;  // element mode
  double objective = 0.0;
  int outer_iterations = 0;
  double stationarity_residual = 0.0;
  bool converged = false;
};

}  // namespace rocpca
