#include "rocpca/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "rocpca/frame.hpp"
#include "rocpca/parallel.hpp"
#include "rocpca/stiefel.hpp"

namespace rocpca {

bool is_constrained(ProblemVariant variant) {
  return variant == ProblemVariant::constrained_row ||
         variant == ProblemVariant::constrained_element;
}

bool is_row_mode(ProblemVariant variant) {
  return variant == ProblemVariant::constrained_row ||
         variant == ProblemVariant::penalized_row;
}

long long CoolingSchedule::at(long long k) const {
  require(k >= 0, ErrorCode::invalid_argument, "cooling index must be >= 0");
  double raw = 2.0 * static_cast<double>(total) / (1.0 + std::exp(nu * static_cast<double>(k)));
  long long q = std::llround(raw);
  return std::max(target_q, std::min(q, total));
}

long long CoolingSchedule::settled_after() const {
  long long k = 0;
  while (at(k) > target_q) ++k;
  return k;
}

namespace {

double penalty_scalar(ThresholdRule rule, double magnitude, double lambda,
                      double eta) {
  if (magnitude == 0.0) return 0.0;
  switch (rule) {
    case ThresholdRule::soft:
      return lambda * magnitude;
    case ThresholdRule::hard:
      return 0.5 * lambda * lambda;
    case ThresholdRule::hard_ridge:
      return 0.5 * eta * magnitude * magnitude +
             0.5 * lambda * lambda / (1.0 + eta);
  }
  return 0.0;
}

long long support_size(const Matrix& s, bool row_mode) {
  long long count = 0;
  if (row_mode) {
    for (Index i = 0; i < s.rows(); ++i)
      if (s.row(i).cwiseAbs().maxCoeff() != 0.0) ++count;
  } else {
    count = (s.array() != 0.0).count();
  }
  return count;
}

double smooth_part(const Matrix& x, const Matrix& v, const Vector& mu,
                   const Matrix& s) {
  Matrix r = x * v - s;
  r.rowwise() -= mu.transpose();
  return 0.5 * r.squaredNorm();
}

double penalty_part(const Problem& problem, const SolverConfig& cfg,
                    const Matrix& s) {
  if (is_constrained(problem.variant)) return 0.5 * cfg.eta * s.squaredNorm();
  double total = 0.0;
  if (is_row_mode(problem.variant)) {
    for (Index i = 0; i < s.rows(); ++i)
      total += penalty_scalar(problem.rule, s.row(i).norm(), cfg.lambda, cfg.eta);
  } else {
    for (Index i = 0; i < s.rows(); ++i)
      for (Index j = 0; j < s.cols(); ++j)
        total += penalty_scalar(problem.rule, std::abs(s(i, j)), cfg.lambda, cfg.eta);
  }
  return total;
}

void validate_config(const Problem& problem, const SolverConfig& cfg) {
  validate_data_matrix(problem.x);
  const Index n = problem.x.rows();
  const Index p = problem.x.cols();
  require(cfg.rank_r >= 1, ErrorCode::config, "rank must be >= 1");
  require(cfg.rank_r < p, ErrorCode::config, "rank must be < p");
  const Index d = p - cfg.rank_r;
  if (is_constrained(problem.variant)) {
    long long units = is_row_mode(problem.variant)
                          ? static_cast<long long>(n)
                          : static_cast<long long>(n) * d;
    require(cfg.q >= 0, ErrorCode::config, "outlier budget must be >= 0");
    require(cfg.q < units, ErrorCode::config,
            "outlier budget must be < the number of candidate units");
  } else {
    require(std::isfinite(cfg.lambda) && cfg.lambda > 0.0, ErrorCode::config,
            "penalized variants need lambda > 0");
  }
  require(std::isfinite(cfg.eta) && cfg.eta >= 0.0, ErrorCode::config,
          "eta must be finite and >= 0");
  require(cfg.kappa > 0.0 && cfg.kappa < 1.0, ErrorCode::config,
          "kappa must lie in (0,1)");
  require(cfg.rho > 0.0 && cfg.rho < 1.0, ErrorCode::config,
          "rho must lie in (0,1)");
  require(cfg.window_T >= 0, ErrorCode::config, "window must be >= 0");
  require(cfg.nu > 0.0, ErrorCode::config, "nu must be > 0");
  require(cfg.m0 >= 1 && cfg.m1 >= 1 && cfg.m1 <= cfg.m0 && cfg.n0 >= 0,
          ErrorCode::config, "multi-start sizes need m0 >= m1 >= 1, n0 >= 0");
  require(cfg.tol_outer > 0.0 && cfg.tol_inner_s > 0.0 && cfg.tol_grad > 0.0 &&
              cfg.tol_rel_f > 0.0,
          ErrorCode::config, "tolerances must be > 0");
  require(cfg.max_outer >= 1 && cfg.max_inner >= 1, ErrorCode::config,
          "iteration caps must be >= 1");
  require(cfg.threads >= 0, ErrorCode::config, "threads must be >= 0");
}

struct Candidate {
  Matrix v;
  Vector mu;
  Matrix s;
  long long cooling_k = 0;
  int outer = 0;
  double objective = std::numeric_limits<double>::infinity();
  bool converged = false;
};

double projector_delta(const Matrix& a, const Matrix& b) {
  return (a * a.transpose() - b * b.transpose()).cwiseAbs().maxCoeff();
}

// Advances the alternation by up to `steps` outer iterations (negative
// means until convergence or the global cap), leaving the ranking
// objective refreshed.
void advance(const Problem& problem, const SolverConfig& cfg,
             const CoolingSchedule& schedule, Candidate& c, int steps) {
  if (c.converged) return;
  const Matrix& x = problem.x;
  const bool constrained = is_constrained(problem.variant);
  const double p = static_cast<double>(x.cols());
  int taken = 0;
  while (c.outer < cfg.max_outer && (steps < 0 || taken < steps)) {
    long long budget = constrained ? schedule.at(c.cooling_k) : -1;
    MuSResult ms = update_mu_s(x, c.v, c.s, problem, cfg, budget);
    c.mu = std::move(ms.mu);
    c.s = std::move(ms.s);
    Matrix j = c.s;
    j.rowwise() += c.mu.transpose();
    StiefelResult vr = minimize_on_stiefel(x, j, c.v, cfg);
    double delta = projector_delta(vr.v, c.v) / p;
    c.v = std::move(vr.v);
    ++c.cooling_k;
    ++c.outer;
    ++taken;
    bool settled = !constrained || budget == schedule.target_q;
    if (settled && delta <= cfg.tol_outer) {
      c.converged = true;
      break;
    }
  }
  c.objective = smooth_part(x, c.v, c.mu, c.s) + penalty_part(problem, cfg, c.s);
}

void collect_flagged(const Matrix& s, bool row_mode, FitResult& out) {
  if (row_mode) {
    for (Index i = 0; i < s.rows(); ++i)
      if (s.row(i).cwiseAbs().maxCoeff() != 0.0) out.flagged_rows.push_back(i);
  } else {
    for (Index i = 0; i < s.rows(); ++i)
      for (Index j = 0; j < s.cols(); ++j)
        if (s(i, j) != 0.0) out.flagged_elements.emplace_back(i, j);
  }
}

}  // namespace

double stationarity_residual(const Problem& problem, const SolverConfig& cfg,
                             const Matrix& v, const Vector& mu) {
  const Matrix& x = problem.x;
  Matrix y = x * v;
  y.rowwise() -= mu.transpose();
  const bool row = is_row_mode(problem.variant);
  Matrix psi;
  if (is_constrained(problem.variant)) {
    // Quantile runs sit at an implicit level: the (q+1)-th largest unit
    // statistic of Y, below which everything was zeroed.
    std::vector<double> stats;
    if (row) {
      stats.resize(static_cast<size_t>(y.rows()));
      for (Index i = 0; i < y.rows(); ++i) stats[static_cast<size_t>(i)] = y.row(i).norm();
    } else {
      stats.resize(static_cast<size_t>(y.size()));
      for (Index i = 0; i < y.rows(); ++i)
        for (Index j = 0; j < y.cols(); ++j)
          stats[static_cast<size_t>(i * y.cols() + j)] = std::abs(y(i, j));
    }
    std::sort(stats.begin(), stats.end(), std::greater<double>());
    double level = (static_cast<size_t>(cfg.q) < stats.size())
                       ? stats[static_cast<size_t>(cfg.q)]
                       : 0.0;
    psi = row ? psi_rowwise(ThresholdRule::hard_ridge, y, level, cfg.eta)
              : psi_elementwise(ThresholdRule::hard_ridge, y, level, cfg.eta);
  } else {
    psi = row ? psi_rowwise(problem.rule, y, cfg.lambda, cfg.eta)
              : psi_elementwise(problem.rule, y, cfg.lambda, cfg.eta);
  }
  double resid1 = psi.colwise().sum().cwiseAbs().maxCoeff();
  Matrix second = x.transpose() * psi - v * (psi.transpose() * (x * v));
  double resid2 = second.cwiseAbs().maxCoeff();
  return std::max(resid1, resid2);
}

namespace {

FitResult finish(const Problem& problem, const SolverConfig& cfg, Candidate win) {
  // One last block update at the target budget makes (mu, S) the exact
  // fixed point at the returned frame.
  MuSResult fin = update_mu_s(problem.x, win.v, win.s, problem, cfg, cfg.q);
  win.mu = std::move(fin.mu);
  win.s = std::move(fin.s);

  FitResult out;
  out.v_perp = std::move(win.v);
  out.mu = std::move(win.mu);
  out.s = std::move(win.s);
  out.objective = smooth_part(problem.x, out.v_perp, out.mu, out.s) +
                  penalty_part(problem, cfg, out.s);
  out.outer_iterations = win.outer;
  out.converged = win.converged;
  collect_flagged(out.s, is_row_mode(problem.variant), out);
  out.stationarity_residual =
      stationarity_residual(problem, cfg, out.v_perp, out.mu);
  out.v_hat = recover_pc_directions(problem.x, out.v_perp, cfg.rank_r);
  return out;
}

}  // namespace

double objective(const Problem& problem, const SolverConfig& cfg, const Matrix& v,
                 const Vector& mu, const Matrix& s) {
  require(v.rows() == problem.x.cols() && v.cols() >= 1, ErrorCode::dimension,
          "frame shape does not match the data");
  require(mu.size() == v.cols() && s.rows() == problem.x.rows() &&
              s.cols() == v.cols(),
          ErrorCode::dimension, "mu or S shape does not match the frame");
  if (is_constrained(problem.variant)) {
    long long used = support_size(s, is_row_mode(problem.variant));
    require(used <= cfg.q, ErrorCode::feasibility,
            "S support exceeds the outlier budget");
  }
  return smooth_part(problem.x, v, mu, s) + penalty_part(problem, cfg, s);
}

MuSResult update_mu_s(const Matrix& x, const Matrix& v_perp, const Matrix& s_init,
                      const Problem& problem, const SolverConfig& cfg,
                      long long budget) {
  require(v_perp.rows() == x.cols(), ErrorCode::dimension,
          "frame rows must match data columns");
  const Index n = x.rows();
  const Index d = v_perp.cols();
  require(s_init.rows() == n && s_init.cols() == d, ErrorCode::dimension,
          "S shape does not match the frame");

  Matrix xv = x * v_perp;
  Eigen::RowVectorXd mean_xv = xv.colwise().mean();
  Matrix centered = xv.rowwise() - mean_xv;

  const bool row = is_row_mode(problem.variant);
  const bool constrained = is_constrained(problem.variant);
  MuSResult out;
  Matrix s = s_init;
  for (int it = 1; it <= cfg.max_inner; ++it) {
    Eigen::RowVectorXd s_mean = s.colwise().mean();
    Matrix y = centered.rowwise() + s_mean;
    Matrix s_new;
    if (constrained) {
      s_new = row ? quantile_threshold_rows(y, budget, cfg.eta)
                  : quantile_threshold_elements(y, budget, cfg.eta);
    } else {
      s_new = row ? apply_rowwise(problem.rule, y, cfg.lambda, cfg.eta)
                  : apply_elementwise(problem.rule, y, cfg.lambda, cfg.eta);
    }
    double delta = (s_new - s).cwiseAbs().maxCoeff();
    s = std::move(s_new);
    out.iterations = it;
    if (delta <= cfg.tol_inner_s) {
      out.converged = true;
      break;
    }
  }
  out.mu = (mean_xv - s.colwise().mean()).transpose();
  out.s = std::move(s);
  return out;
}

Matrix recover_pc_directions(const Matrix& x, const Matrix& v_perp, int r) {
  require(v_perp.rows() == x.cols(), ErrorCode::dimension,
          "frame rows must match data columns");
  const Index p = x.cols();
  const Index d = v_perp.cols();
  require(r >= 1 && r <= p - d, ErrorCode::dimension,
          "rank must lie in [1, p - d]");
  Matrix z = x - (x * v_perp) * v_perp.transpose();
  Eigen::BDCSVD<Matrix> svd(z, Eigen::ComputeThinV);
  const Vector& sigma = svd.singularValues();
  Index lead = 0;
  double sigma_tol = sigma.size() > 0 ? 1e-12 * sigma(0) : 0.0;
  while (lead < sigma.size() && sigma(lead) > sigma_tol) ++lead;
  if (r <= lead) return svd.matrixV().leftCols(r);
  // The projected data does not span r directions; complete the basis
  // inside the complement's orthogonal span.
  Matrix joint(p, d + lead);
  joint.leftCols(d) = v_perp;
  if (lead > 0) joint.rightCols(lead) = svd.matrixV().leftCols(lead);
  Matrix completion = orthonormal_complement(joint);
  Matrix v_hat(p, r);
  if (lead > 0) v_hat.leftCols(lead) = svd.matrixV().leftCols(lead);
  v_hat.rightCols(r - lead) = completion.leftCols(r - lead);
  return v_hat;
}

FitResult fit(const Problem& problem, const SolverConfig& cfg) {
  validate_config(problem, cfg);
  const Index n = problem.x.rows();
  const Index p = problem.x.cols();
  const Index d = p - cfg.rank_r;

  CoolingSchedule schedule;
  schedule.target_q = cfg.q;
  schedule.nu = cfg.nu;
  schedule.total = is_row_mode(problem.variant) ? static_cast<long long>(n)
                                                : static_cast<long long>(n) * d;

  std::vector<Candidate> candidates(static_cast<size_t>(cfg.m0));
  parallel_for(cfg.m0, cfg.threads, [&](long long c) {
    std::mt19937_64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(c)));
    Candidate cand;
    cand.v = random_orthonormal_frame(p, d, rng).matrix();
    cand.mu = Vector::Zero(d);
    cand.s = Matrix::Zero(n, d);
    advance(problem, cfg, schedule, cand, cfg.n0);
    candidates[static_cast<size_t>(c)] = std::move(cand);
  });

  std::vector<int> order(static_cast<size_t>(cfg.m0));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    double fa = candidates[static_cast<size_t>(a)].objective;
    double fb = candidates[static_cast<size_t>(b)].objective;
    if (fa != fb) return fa < fb;
    return a < b;
  });

  const int keep = cfg.m1;
  parallel_for(keep, cfg.threads, [&](long long i) {
    advance(problem, cfg, schedule, candidates[static_cast<size_t>(order[static_cast<size_t>(i)])], -1);
  });

  int best = order[0];
  for (int i = 1; i < keep; ++i) {
    int c = order[static_cast<size_t>(i)];
    const Candidate& cand = candidates[static_cast<size_t>(c)];
    const Candidate& incumbent = candidates[static_cast<size_t>(best)];
    if (cand.objective < incumbent.objective ||
        (cand.objective == incumbent.objective && c < best)) {
      best = c;
    }
  }
  return finish(problem, cfg, std::move(candidates[static_cast<size_t>(best)]));
}

FitResult sequential_fit(const Problem& problem, const SolverConfig& cfg) {
  validate_config(problem, cfg);
  const Index n = problem.x.rows();
  const Index p = problem.x.cols();
  const int r = cfg.rank_r;

  SolverConfig stage_cfg = cfg;
  stage_cfg.rank_r = 1;
  Matrix x_cur = problem.x;
  Matrix v_hat(p, r);
  int outer_total = 0;
  bool converged = true;
  for (int k = 0; k < r; ++k) {
    Problem stage{x_cur, problem.variant, problem.rule};
    FitResult res = fit(stage, stage_cfg);
    v_hat.col(k) = res.v_hat.col(0);
    x_cur -= (x_cur * res.v_hat) * res.v_hat.transpose();
    outer_total += res.outer_iterations;
    converged = converged && res.converged;
  }

  FitResult out;
  out.v_hat = v_hat;
  out.v_perp = orthonormal_complement(v_hat);
  MuSResult ms = update_mu_s(problem.x, out.v_perp,
                             Matrix::Zero(n, p - r), problem, cfg, cfg.q);
  out.mu = std::move(ms.mu);
  out.s = std::move(ms.s);
  out.objective = smooth_part(problem.x, out.v_perp, out.mu, out.s) +
                  penalty_part(problem, cfg, out.s);
  out.outer_iterations = outer_total;
  out.converged = converged;
  collect_flagged(out.s, is_row_mode(problem.variant), out);
  out.stationarity_residual =
      stationarity_residual(problem, cfg, out.v_perp, out.mu);
  return out;
}

}  // namespace rocpca
