#include "rocpca/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace rocpca {

namespace {

void check_lambda(double lambda, double eta) {
  require(std::isfinite(lambda) && lambda >= 0.0, ErrorCode::config,
          "threshold level must be finite and nonnegative");
  require(std::isfinite(eta) && eta >= 0.0, ErrorCode::config,
          "ridge parameter must be finite and nonnegative");
}

// Keeps the q largest of `keys` (ties to the smaller index), scaling the
// associated unit through `scale_unit` and zeroing the rest.
template <typename ScaleUnit, typename ZeroUnit>
void keep_top_q(const std::vector<double>& keys, long long q, ScaleUnit scale,
                ZeroUnit zero) {
  const long long total = static_cast<long long>(keys.size());
  if (q >= total) {
    for (long long i = 0; i < total; ++i) scale(i);
    return;
  }
  std::vector<long long> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  auto better = [&](long long a, long long b) {
    if (keys[static_cast<size_t>(a)] != keys[static_cast<size_t>(b)])
      return keys[static_cast<size_t>(a)] > keys[static_cast<size_t>(b)];
    return a < b;
  };
  if (q > 0)
    std::nth_element(order.begin(), order.begin() + (q - 1), order.end(), better);
  std::vector<char> kept(keys.size(), 0);
  for (long long i = 0; i < q; ++i) kept[static_cast<size_t>(order[static_cast<size_t>(i)])] = 1;
  for (long long i = 0; i < total; ++i) {
    if (kept[static_cast<size_t>(i)])
      scale(i);
    else
      zero(i);
  }
}

}  // namespace

double apply_scalar(ThresholdRule rule, double t, double lambda, double eta) {
  check_lambda(lambda, eta);
  switch (rule) {
    case ThresholdRule::soft: {
      double m = std::abs(t) - lambda;
      return m > 0.0 ? std::copysign(m, t) : 0.0;
    }
    case ThresholdRule::hard:
      return std::abs(t) > lambda ? t : 0.0;
    case ThresholdRule::hard_ridge:
      return std::abs(t) > lambda ? t / (1.0 + eta) : 0.0;
  }
  fail(ErrorCode::internal, "unknown threshold rule");
}

Matrix apply_elementwise(ThresholdRule rule, const Matrix& y, double lambda,
                         double eta) {
  Matrix out(y.rows(), y.cols());
  for (Index i = 0; i < y.rows(); ++i)
    for (Index j = 0; j < y.cols(); ++j)
      out(i, j) = apply_scalar(rule, y(i, j), lambda, eta);
  return out;
}

Matrix apply_rowwise(ThresholdRule rule, const Matrix& y, double lambda,
                     double eta) {
  check_lambda(lambda, eta);
  Matrix out = Matrix::Zero(y.rows(), y.cols());
  for (Index i = 0; i < y.rows(); ++i) {
    double norm = y.row(i).norm();
    if (norm == 0.0) continue;
    double kept = apply_scalar(rule, norm, lambda, eta);
    if (kept != 0.0) out.row(i) = y.row(i) * (kept / norm);
  }
  return out;
}

Matrix quantile_threshold_elements(const Matrix& y, long long q, double eta) {
  require(q >= 0 && q <= y.size(), ErrorCode::config,
          "element budget must lie in [0, n*d]");
  check_lambda(0.0, eta);
  std::vector<double> mags(static_cast<size_t>(y.size()));
  for (Index i = 0; i < y.rows(); ++i)
    for (Index j = 0; j < y.cols(); ++j)
      mags[static_cast<size_t>(i * y.cols() + j)] = std::abs(y(i, j));
  Matrix out(y.rows(), y.cols());
  const double shrink = 1.0 / (1.0 + eta);
  keep_top_q(
      mags, q,
      [&](long long k) {
        Index i = static_cast<Index>(k) / y.cols();
        Index j = static_cast<Index>(k) % y.cols();
        out(i, j) = y(i, j) * shrink;
      },
      [&](long long k) {
        Index i = static_cast<Index>(k) / y.cols();
        Index j = static_cast<Index>(k) % y.cols();
        out(i, j) = 0.0;
      });
  return out;
}

Matrix quantile_threshold_rows(const Matrix& y, long long q, double eta) {
  require(q >= 0 && q <= y.rows(), ErrorCode::config,
          "row budget must lie in [0, n]");
  check_lambda(0.0, eta);
  std::vector<double> norms(static_cast<size_t>(y.rows()));
  for (Index i = 0; i < y.rows(); ++i) norms[static_cast<size_t>(i)] = y.row(i).norm();
  Matrix out(y.rows(), y.cols());
  const double shrink = 1.0 / (1.0 + eta);
  keep_top_q(
      norms, q, [&](long long i) { out.row(i) = y.row(i) * shrink; },
      [&](long long i) { out.row(i).setZero(); });
  return out;
}

double psi_scalar(ThresholdRule rule, double t, double lambda, double eta) {
  return t - apply_scalar(rule, t, lambda, eta);
}

Matrix psi_elementwise(ThresholdRule rule, const Matrix& y, double lambda,
                       double eta) {
  return y - apply_elementwise(rule, y, lambda, eta);
}

Matrix psi_rowwise(ThresholdRule rule, const Matrix& y, double lambda, double eta) {
  return y - apply_rowwise(rule, y, lambda, eta);
}

}  // namespace rocpca
