#include "rocpca/batch.hpp"

#include <cmath>
#include <numeric>

#include "rocpca/frame.hpp"

namespace rocpca {

namespace {

constexpr long long kSingleBatchLimit = 60;
constexpr long long kBatchCap = 100;

long long chunk_size(long long ambient) {
  return std::min(kBatchCap, std::llround(0.35 * static_cast<double>(ambient)));
}

}  // namespace

std::vector<long long> default_plan(Index p, int r) {
  require(p >= 2, ErrorCode::invalid_argument, "p must be >= 2");
  require(r >= 1 && r < p, ErrorCode::invalid_argument,
          "rank must lie in [1, p)");
  long long d_rem = static_cast<long long>(p) - r;
  if (d_rem <= kSingleBatchLimit) return {d_rem};

  std::vector<long long> plan;
  long long ambient = p;
  long long m = chunk_size(ambient);
  // Capped regime: emit full chunks and re-evaluate the cap as the
  // ambient dimension shrinks.
  while (m == kBatchCap && d_rem > kSingleBatchLimit && d_rem > m) {
    plan.push_back(m);
    d_rem -= m;
    ambient -= m;
    m = chunk_size(ambient);
  }
  // Uncapped regime: the chunk size freezes.
  while (d_rem > kSingleBatchLimit && d_rem > m) {
    plan.push_back(m);
    d_rem -= m;
  }
  plan.push_back(d_rem);
  return plan;
}

FitResult batch_fit(const Problem& problem, const SolverConfig& cfg,
                    const std::vector<long long>& plan) {
  validate_data_matrix(problem.x);
  const Index n = problem.x.rows();
  const Index p = problem.x.cols();
  require(cfg.rank_r >= 1 && cfg.rank_r < p, ErrorCode::config,
          "rank must lie in [1, p)");
  require(!plan.empty(), ErrorCode::config, "batch plan must be nonempty");
  for (long long m : plan)
    require(m >= 1, ErrorCode::config, "batch sizes must be >= 1");
  long long total = std::accumulate(plan.begin(), plan.end(), 0ll);
  require(total == static_cast<long long>(p) - cfg.rank_r, ErrorCode::config,
          "batch sizes must sum to p - rank");

  const int k_total = static_cast<int>(plan.size());
  Matrix x_cur = problem.x;
  Matrix accum = Matrix::Identity(p, p);
  int outer_total = 0;
  bool converged = true;
  for (int k = 0; k < k_total; ++k) {
    const Index p_cur = x_cur.cols();
    SolverConfig stage_cfg = cfg;
    stage_cfg.rank_r = static_cast<int>(p_cur - plan[static_cast<size_t>(k)]);
    stage_cfg.seed = mix_seed(cfg.seed, 0x9000ull + static_cast<std::uint64_t>(k));
    if (k_total > 1) {
      double exponent = static_cast<double>(k_total - 1 - k) /
                        static_cast<double>(k_total - 1);
      stage_cfg.tol_outer = cfg.tol_outer * std::pow(10.0, exponent);
    }
    Problem stage{x_cur, problem.variant, problem.rule};
    FitResult res = fit(stage, stage_cfg);
    outer_total += res.outer_iterations;
    converged = converged && res.converged;
    Matrix z = x_cur - (x_cur * res.v_perp) * res.v_perp.transpose();
    x_cur = z * res.v_hat;
    accum = (accum * res.v_hat).eval();
  }

  // Order the retained directions by decreasing singular value of the
  // compressed data, expressed against the original coordinates.
  Matrix proj = problem.x * accum;
  Eigen::BDCSVD<Matrix> svd(proj, Eigen::ComputeThinV);
  Matrix v_hat = reorthonormalize(accum * svd.matrixV());

  FitResult out;
  out.v_hat = std::move(v_hat);
  out.v_perp = orthonormal_complement(out.v_hat);
  MuSResult ms = update_mu_s(problem.x, out.v_perp,
                             Matrix::Zero(n, p - cfg.rank_r), problem, cfg,
                             cfg.q);
  out.mu = std::move(ms.mu);
  out.s = std::move(ms.s);
  out.objective = objective(problem, cfg, out.v_perp, out.mu, out.s);
  out.stationarity_residual =
      stationarity_residual(problem, cfg, out.v_perp, out.mu);
  out.outer_iterations = outer_total;
  out.converged = converged;
  if (is_row_mode(problem.variant)) {
    for (Index i = 0; i < out.s.rows(); ++i)
      if (out.s.row(i).cwiseAbs().maxCoeff() != 0.0)
        out.flagged_rows.push_back(i);
  } else {
    for (Index i = 0; i < out.s.rows(); ++i)
      for (Index j = 0; j < out.s.cols(); ++j)
        if (out.s(i, j) != 0.0) out.flagged_elements.emplace_back(i, j);
  }
  return out;
}

FitResult batch_fit(const Problem& problem, const SolverConfig& cfg) {
  return batch_fit(problem, cfg, default_plan(problem.x.cols(), cfg.rank_r));
}

}  // namespace rocpca
