#include "rocpca/stiefel.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "rocpca/frame.hpp"

namespace rocpca {

namespace {

constexpr int kMaxBacktracks = 60;
constexpr double kOrthoTol = 1e-8;
constexpr int kReorthoPeriod = 50;

double objective_value(const Matrix& x, const Matrix& v, const Matrix& j) {
  return 0.5 * (x * v - j).squaredNorm();
}

// tau-independent pieces of the two curve formulas, computed once per line
// search rather than once per trial.
struct FastFactors {
  Matrix b;  // a2^T a1, 2d x 2d
  Matrix c;  // a2^T v,  2d x d
};

struct DenseFactors {
  Matrix w;   // a1 a2^T, p x p
  Matrix wv;  // w v,     p x d
};

std::optional<Matrix> fast_step(const Matrix& v, const Matrix& a1,
                                const FastFactors& factors, double tau) {
  const Index two_d = a1.cols();
  Matrix m =
      Matrix::Identity(two_d, two_d) + (0.5 * tau) * factors.b;
  Eigen::FullPivLU<Matrix> lu(m);
  if (!lu.isInvertible()) return std::nullopt;
  return v - tau * (a1 * lu.solve(factors.c));
}

Matrix dense_step(const Matrix& v, const DenseFactors& factors, double tau) {
  const Index p = v.rows();
  Matrix lhs = Matrix::Identity(p, p) + (0.5 * tau) * factors.w;
  Matrix rhs = v - (0.5 * tau) * factors.wv;
  return Eigen::PartialPivLU<Matrix>(lhs).solve(rhs);
}

}  // namespace

Matrix euclidean_gradient(const Matrix& x, const Matrix& v, const Matrix& j) {
  require(x.cols() == v.rows() && x.rows() == j.rows() && v.cols() == j.cols(),
          ErrorCode::dimension, "gradient operands have mismatched shapes");
  return x.transpose() * (x * v - j);
}

Matrix riemannian_gradient(const Matrix& g, const Matrix& v) {
  require(g.rows() == v.rows() && g.cols() == v.cols(), ErrorCode::dimension,
          "gradient and frame have mismatched shapes");
  return g - v * (g.transpose() * v);
}

double curve_derivative_at_zero(const Matrix& g, const Matrix& v) {
  // ||W||_F^2 = 2||G||^2 - 2 tr((G^T V)^2) for V^T V = I.
  Matrix m = g.transpose() * v;
  double tr_m2 = m.cwiseProduct(m.transpose()).sum();
  return -(g.squaredNorm() - tr_m2);
}

std::optional<Matrix> cayley_step_fast(const Matrix& v, const Matrix& a1,
                                       const Matrix& a2, double tau) {
  const Index two_d = a1.cols();
  require(a2.cols() == two_d && a1.rows() == v.rows() && a2.rows() == v.rows(),
          ErrorCode::dimension, "cayley factors have mismatched shapes");
  require(two_d < v.rows(), ErrorCode::dimension,
          "fast cayley path requires 2d < p");
  FastFactors factors{a2.transpose() * a1, a2.transpose() * v};
  return fast_step(v, a1, factors, tau);
}

Matrix cayley_step_dense(const Matrix& v, const Matrix& a1, const Matrix& a2,
                         double tau) {
  require(a1.cols() == a2.cols() && a1.rows() == v.rows() && a2.rows() == v.rows(),
          ErrorCode::dimension, "cayley factors have mismatched shapes");
  DenseFactors factors;
  factors.w = a1 * a2.transpose();
  factors.wv = factors.w * v;
  return dense_step(v, factors, tau);
}

std::optional<Matrix> cayley_step(const Matrix& v, const Matrix& a1,
                                  const Matrix& a2, double tau) {
  if (a1.cols() < v.rows()) return cayley_step_fast(v, a1, a2, tau);
  return cayley_step_dense(v, a1, a2, tau);
}

double bb_stepsize(const Matrix& delta_v, const Matrix& delta_grad, long long k) {
  if (k == 0) return 0.5;
  double cross = std::abs(delta_v.cwiseProduct(delta_grad).sum());
  double value;
  if (k % 2 == 0) {
    value = delta_v.squaredNorm() / cross;
  } else {
    value = cross / delta_grad.squaredNorm();
  }
  // Degenerate ratios fall back to the cold-start step.
  if (!std::isfinite(value) || value <= 0.0) return 0.5;
  return std::clamp(value, 1e-10, 1e10);
}

LineSearchResult nonmonotone_search(const Matrix& x, const Matrix& j,
                                    const Matrix& v, const Matrix& a1,
                                    const Matrix& a2, double f_ref,
                                    double fprime0, double tau0,
                                    const SolverConfig& cfg) {
  LineSearchResult out;
  const bool fast = a1.cols() < v.rows();
  FastFactors fast_factors;
  DenseFactors dense_factors;
  if (fast) {
    fast_factors.b = a2.transpose() * a1;
    fast_factors.c = a2.transpose() * v;
  } else {
    dense_factors.w = a1 * a2.transpose();
    dense_factors.wv = dense_factors.w * v;
  }
  double tau = tau0;
  for (int m = 0; m <= kMaxBacktracks; ++m) {
    std::optional<Matrix> trial =
        fast ? fast_step(v, a1, fast_factors, tau)
             : std::optional<Matrix>(dense_step(v, dense_factors, tau));
    if (trial) {
      double f_trial = objective_value(x, *trial, j);
      if (std::isfinite(f_trial) && f_trial <= f_ref + cfg.rho * tau * fprime0) {
        out.v = std::move(*trial);
        out.f = f_trial;
        out.tau = tau;
        out.backtracks = m;
        out.accepted = true;
        return out;
      }
    }
    tau *= cfg.kappa;
  }
  out.v = v;
  out.f = f_ref;
  out.tau = tau;
  out.backtracks = kMaxBacktracks;
  out.accepted = false;
  return out;
}

StiefelResult minimize_on_stiefel(const Matrix& x, const Matrix& j,
                                  const Matrix& v0, const SolverConfig& cfg) {
  require(x.cols() == v0.rows() && x.rows() == j.rows() && v0.cols() == j.cols(),
          ErrorCode::dimension, "solver operands have mismatched shapes");

  Matrix v = v0;
  double f = objective_value(x, v, j);
  StiefelResult best{v, f, 0.0, 0, false};

  std::deque<double> window{f};
  Matrix prev_v, prev_grad;
  int k = 0;
  bool converged = false;

  for (; k < cfg.max_inner; ++k) {
    Matrix g = euclidean_gradient(x, v, j);
    Matrix grad = riemannian_gradient(g, v);
    double gnorm = grad.norm();
    if (gnorm <= cfg.tol_grad * (1.0 + std::abs(f))) {
      converged = true;
      break;
    }
    double fprime0 = curve_derivative_at_zero(g, v);
    if (!(fprime0 < 0.0)) {
      converged = true;
      break;
    }

    double tau0 = (k == 0) ? 0.5 : bb_stepsize(v - prev_v, grad - prev_grad, k);
    double f_ref = *std::max_element(window.begin(), window.end());

    Matrix a1(v.rows(), 2 * v.cols());
    a1 << g, v;
    Matrix a2(v.rows(), 2 * v.cols());
    a2 << v, -g;
    LineSearchResult step =
        nonmonotone_search(x, j, v, a1, a2, f_ref, fprime0, tau0, cfg);
    if (!step.accepted) break;

    prev_v = v;
    prev_grad = std::move(grad);
    v = std::move(step.v);
    f = step.f;

    bool periodic = ((k + 1) % kReorthoPeriod == 0);
    if (periodic || orthonormality_defect(v) > kOrthoTol) {
      if (orthonormality_defect(v) > 1e-14) {
        v = reorthonormalize(v);
        f = objective_value(x, v, j);
      }
    }

    window.push_back(f);
    if (static_cast<int>(window.size()) > cfg.window_T + 1) window.pop_front();
    if (f < best.f) {
      best.f = f;
      best.v = v;
    }
    // Plateau stop: no observable progress across the whole memory window.
    // A per-step test would fire on one-off tiny BB steps long before the
    // gradient criterion can be met.
    if (static_cast<int>(window.size()) == cfg.window_T + 1) {
      auto [lo, hi] = std::minmax_element(window.begin(), window.end());
      if (*hi - *lo <= cfg.tol_rel_f * (1.0 + std::abs(f))) {
        ++k;
        converged = true;
        break;
      }
    }
  }

  if (f <= best.f) {
    best.f = f;
    best.v = std::move(v);
  }
  best.iterations = k;
  best.converged = converged;
  Matrix g_final = euclidean_gradient(x, best.v, j);
  best.grad_norm = riemannian_gradient(g_final, best.v).norm();
  return best;
}

}  // namespace rocpca
