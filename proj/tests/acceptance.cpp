// Acceptance battery: one PASS/FAIL line per criterion, exit code equal to
// the number of failures. Each criterion restates its setup locally so the
// file reads as a frozen contract.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "rocpca/batch.hpp"
#include "rocpca/bench.hpp"
#include "rocpca/frame.hpp"
#include "rocpca/solver.hpp"
#include "rocpca/stiefel.hpp"
#include "rocpca/threshold.hpp"
#include "support.hpp"

using namespace rocpca;

namespace {

int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s  %s  [%s]\n", pass ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

SyntheticSpec table1_spec(long long outliers, std::uint64_t seed) {
  SyntheticSpec spec;
  spec.n = 100;
  spec.p = 10;
  spec.r = 3;
  spec.d_values = {60.0, 40.0, 20.0};
  spec.sigma2 = 2.0;
  spec.outlier_mode = OutlierMode::row;
  spec.num_outliers = outliers;
  spec.leverage = 4.5;
  spec.seed = seed;
  return spec;
}

SyntheticSpec replicate(const SyntheticSpec& base, int rep) {
  SyntheticSpec spec = base;
  spec.seed = mix_seed(base.seed, 0xA000ull + static_cast<std::uint64_t>(rep));
  return spec;
}

SolverConfig replicate_cfg(const SolverConfig& base, const SyntheticSpec& spec,
                           long long q, int rep) {
  SolverConfig cfg = base;
  cfg.rank_r = spec.r;
  cfg.mode = spec.outlier_mode;
  cfg.q = q;
  cfg.seed = mix_seed(spec.seed, 0xC000ull + static_cast<std::uint64_t>(rep));
  return cfg;
}

// --- 1. Table-1 base cell: O=4, L=4.5, alpha=2 ------------------------------
void criterion_1() {
  const double t0 = now_seconds();
  SolverConfig cfg;
  std::vector<QSensitivityCell> cells =
      run_q_sensitivity(table1_spec(4, 1), {2.0}, 20, cfg);
  const QSensitivityCell& c = cells.at(0);
  const double elapsed = now_seconds() - t0;
  const bool pass = c.mean_affinity >= 93.0 && c.mean_masking <= 0.01 &&
                    c.mean_jd >= 0.95 && c.mean_swamping >= 0.02 &&
                    c.mean_swamping <= 0.07 && elapsed <= 300.0;
  report("criterion 1: O=4 alpha=2 cell, 20 reps", pass,
         "affinity=" + num(c.mean_affinity) + " M=" + num(c.mean_masking) +
             " JD=" + num(c.mean_jd) + " S=" + num(c.mean_swamping) +
             " time=" + num(elapsed) + "s");
}

// --- 2. Table-1 under-budget cell: O=16, alpha=0.8 --------------------------
void criterion_2() {
  SolverConfig cfg;
  std::vector<QSensitivityCell> cells =
      run_q_sensitivity(table1_spec(16, 1), {0.8}, 20, cfg);
  const QSensitivityCell& c = cells.at(0);
  const bool pass = c.mean_masking >= 0.4 && c.mean_jd <= 0.1;
  report("criterion 2: O=16 alpha=0.8 failure mode, 20 reps", pass,
         "M=" + num(c.mean_masking) + " JD=" + num(c.mean_jd));
}

SyntheticSpec table2_first(std::uint64_t seed) {
  SyntheticSpec spec;
  spec.n = 100;
  spec.p = 50;
  spec.r = 3;
  spec.d_values = {100.0, 60.0, 20.0};
  spec.sigma2 = 0.5;
  spec.outlier_mode = OutlierMode::row;
  spec.num_outliers = 10;
  spec.leverage = 10.0;
  spec.seed = seed;
  return spec;
}

// --- 3. Table-2 r-Type: robust fit vs plain PCA -----------------------------
void criterion_3() {
  SolverConfig cfg;
  std::vector<ComparisonRow> rows =
      run_comparison({table2_first(1)}, 2.0, 10, true, cfg);
  double robust = -1.0, plain = -1.0;
  for (const ComparisonRow& row : rows) {
    if (row.method == "rocpca") robust = row.mean_affinity;
    if (row.method == "pca") plain = row.mean_affinity;
  }
  const bool pass = robust >= 92.0 && plain >= 0.0 && plain <= 10.0;
  report("criterion 3: (100,50) robust vs plain PCA, 10 reps", pass,
         "rocpca=" + num(robust) + " pca=" + num(plain));
}

// --- 4. Table-2 bottom row: every replicate ---------------------------------
void criterion_4() {
  SyntheticSpec base = table2_first(1);
  base.n = 450;
  base.p = 15;
  base.sigma2 = 0.001;
  base.num_outliers = 2;
  SolverConfig cfg;
  double min_affinity = 1e300;
  for (int rep = 0; rep < 5; ++rep) {
    auto [x, truth] = generate(replicate(base, rep));
    Problem problem{x, ProblemVariant::constrained_row, ThresholdRule::soft};
    FitResult res = fit(problem, replicate_cfg(cfg, base, 4, rep));
    min_affinity = std::min(min_affinity, evaluate(res, truth).affinity);
  }
  report("criterion 4: (450,15) affinity on every one of 5 reps",
         min_affinity >= 99.0, "min affinity=" + num(min_affinity));
}

// --- 5. Table-4 e-Type: element outliers ------------------------------------
void criterion_5() {
  SyntheticSpec spec;
  spec.n = 100;
  spec.p = 18;
  spec.r = 3;
  spec.d_values = {80.0, 60.0, 40.0};
  spec.sigma2 = 0.5;
  spec.outlier_mode = OutlierMode::element;
  spec.num_outliers = 60;
  spec.leverage = 15.0;
  spec.seed = 1;
  SolverConfig cfg;
  double mean_affinity = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    auto [x, truth] = generate(replicate(spec, rep));
    Problem problem{x, ProblemVariant::constrained_element,
                    ThresholdRule::soft};
    FitResult res = fit(problem, replicate_cfg(cfg, spec, 120, rep));
    mean_affinity += evaluate(res, truth).affinity;
  }
  mean_affinity /= 10.0;
  report("criterion 5: element mode qe=120, 10 reps", mean_affinity >= 95.0,
         "affinity=" + num(mean_affinity));
}

// --- 6. Batch variant: quality at p=100, wall-time ratio at p=300 -----------
void criterion_6() {
  SyntheticSpec spec;
  spec.n = 40;
  spec.r = 3;
  spec.d_values = {80.0, 60.0, 40.0};
  spec.sigma2 = 1.5;
  spec.outlier_mode = OutlierMode::row;
  spec.num_outliers = 4;
  spec.leverage = 5.0;
  spec.seed = 1;

  // The outlier count is fixed and known in this controlled comparison, so
  // the budget is exact (alpha = 1): over-budgeting is a robustness question
  // studied by the q-sensitivity cell, not by the batching comparison. Both
  // methods run the same lean inner budget; the alternation tolerates inexact
  // subspace steps, and the affinities match the exhaustive-inner setting to
  // three decimals at a fraction of the cost.
  SolverConfig cfg;
  cfg.max_inner = 50;

  spec.p = 100;
  std::vector<BatchComparisonRow> small =
      run_batch_comparison({spec}, 1.0, 10, cfg);
  double full100 = -1.0, batch100 = -1.0;
  for (const BatchComparisonRow& row : small) {
    if (row.method == "full") full100 = row.mean_affinity;
    if (row.method == "batch") batch100 = row.mean_affinity;
  }

  spec.p = 300;
  std::vector<BatchComparisonRow> large =
      run_batch_comparison({spec}, 1.0, 1, cfg);
  double full_seconds = 0.0, batch_seconds = 1e300;
  for (const BatchComparisonRow& row : large) {
    if (row.method == "full") full_seconds = row.mean_seconds;
    if (row.method == "batch") batch_seconds = row.mean_seconds;
  }

  const bool pass = batch100 >= 93.0 && batch100 >= full100 - 4.0 &&
                    full_seconds > 0.0 &&
                    batch_seconds <= 0.7 * full_seconds;
  report("criterion 6: batch plan [35,35,27] quality and [100,70,70,57] speed",
         pass,
         "full100=" + num(full100) + " batch100=" + num(batch100) +
             " full300=" + num(full_seconds) + "s batch300=" +
             num(batch_seconds) + "s ratio=" +
             num(full_seconds > 0 ? batch_seconds / full_seconds : -1.0));
}

// --- 7. SVD pitfall ceiling --------------------------------------------------
void criterion_7() {
  double worst = 0.0;
  for (const auto& [p, eps] : std::vector<std::pair<Index, double>>{
           {10001, 0.1}, {2, 1.0}}) {
    PitfallReport rep = svd_pitfall_demo(p, eps, 50, 0);
    worst = std::max(worst, std::abs(rep.measured_cosine -
                                     rep.theoretical_cosine) /
                                rep.theoretical_cosine);
  }
  report("criterion 7: pitfall ceiling closed form", worst <= 1e-4,
         "max rel err=" + num(worst));
}

// --- 8a. Orthonormality after random Cayley steps ---------------------------
void criterion_8a() {
  std::mt19937_64 rng(801);
  std::uniform_int_distribution<Index> p_dist(4, 32);
  std::uniform_real_distribution<double> log_tau(-4.0, 0.5);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    Index p = p_dist(rng);
    std::uniform_int_distribution<Index> d_dist(1, std::min<Index>(p - 1, 8));
    Index d = d_dist(rng);
    Matrix v = random_orthonormal_frame(p, d, rng).matrix();
    Matrix g = random_gaussian(p, d, rng);
    Matrix a1(p, 2 * d), a2(p, 2 * d);
    a1 << g, v;
    a2 << v, -g;
    double tau = std::pow(10.0, log_tau(rng));
    std::optional<Matrix> stepped = cayley_step(v, a1, a2, tau);
    Matrix next = stepped ? *stepped : cayley_step_dense(v, a1, a2, tau);
    double defect =
        (next.transpose() * next - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
    worst = std::max(worst, defect);
  }
  report("criterion 8a: orthonormality across 10^4 Cayley steps",
         worst <= 1e-8, "max defect=" + num(worst));
}

// --- 8b. Proximal rules vs grid / exhaustive enumeration --------------------
double penalty_value(ThresholdRule rule, double s, double lambda, double eta) {
  switch (rule) {
    case ThresholdRule::soft:
      return lambda * std::abs(s);
    case ThresholdRule::hard:
      return s != 0.0 ? 0.5 * lambda * lambda : 0.0;
    case ThresholdRule::hard_ridge:
      return 0.5 * eta * s * s +
             (s != 0.0 ? 0.5 * lambda * lambda / (1.0 + eta) : 0.0);
  }
  return 0.0;
}

void criterion_8b() {
  std::mt19937_64 rng(802);
  std::normal_distribution<double> y_dist(0.0, 2.0);
  std::uniform_real_distribution<double> lambda_dist(0.1, 3.0);
  std::uniform_real_distribution<double> eta_dist(0.0, 2.0);
  const ThresholdRule rules[] = {ThresholdRule::soft, ThresholdRule::hard,
                                 ThresholdRule::hard_ridge};
  double worst_gap = -1e300;
  for (int i = 0; i < 10000; ++i) {
    ThresholdRule rule = rules[i % 3];
    double y = y_dist(rng);
    double lambda = lambda_dist(rng);
    double eta = rule == ThresholdRule::hard_ridge ? eta_dist(rng) : 0.0;
    double s_star = apply_scalar(rule, y, lambda, eta);
    auto objective_at = [&](double s) {
      return 0.5 * (y - s) * (y - s) + penalty_value(rule, s, lambda, eta);
    };
    double best_grid = objective_at(0.0);
    const double radius = std::abs(y) + lambda + 1.0;
    const long long steps = static_cast<long long>(radius / 1e-4);
    for (long long k = -steps; k <= steps; ++k)
      best_grid = std::min(best_grid, objective_at(k * 1e-4));
    worst_gap = std::max(worst_gap, objective_at(s_star) - best_grid);
  }

  // Quantile element rule vs exhaustive support enumeration on 2x3 inputs.
  bool enumeration_ok = true;
  for (int inst = 0; inst < 20 && enumeration_ok; ++inst) {
    Matrix y = random_gaussian(2, 3, rng);
    double eta = (inst % 3) * 0.65;
    for (long long q = 0; q <= 5; ++q) {
      Matrix s = quantile_threshold_elements(y, q, eta);
      double achieved = 0.5 * (y - s).squaredNorm() + 0.5 * eta * s.squaredNorm();
      double best = 1e300;
      for (int mask = 0; mask < 64; ++mask) {
        if (__builtin_popcount(mask) > q) continue;
        double value = 0.0;
        for (int bit = 0; bit < 6; ++bit) {
          double yij = y(bit / 3, bit % 3);
          value += (mask >> bit) & 1
                       ? 0.5 * yij * yij * eta / (1.0 + eta)
                       : 0.5 * yij * yij;
        }
        best = std::min(best, value);
      }
      if (std::abs(achieved - best) > 1e-12) enumeration_ok = false;
    }
  }
  report("criterion 8b: proximal grid gap and quantile enumeration",
         worst_gap <= 1e-6 && enumeration_ok,
         "max gap=" + num(worst_gap) +
             std::string(enumeration_ok ? ", enumeration exact"
                                        : ", enumeration mismatch"));
}

// --- 8c. Gradient checks -----------------------------------------------------
void criterion_8c() {
  std::mt19937_64 rng(803);
  std::uniform_int_distribution<Index> n_dist(8, 20), p_dist(5, 12),
      d_dist(1, 4);
  double worst_curve = 0.0, worst_euclid = 0.0;
  for (int inst = 0; inst < 100; ++inst) {
    Index n = n_dist(rng), p = p_dist(rng);
    Index d = std::min<Index>(d_dist(rng), p - 1);
    Matrix x = random_gaussian(n, p, rng);
    Matrix j = random_gaussian(n, d, rng);
    Matrix v = random_orthonormal_frame(p, d, rng).matrix();
    Matrix g = euclidean_gradient(x, v, j);

    Matrix a1(p, 2 * d), a2(p, 2 * d);
    a1 << g, v;
    a2 << v, -g;
    auto f_at = [&](double tau) {
      Matrix moved = cayley_step_dense(v, a1, a2, tau);
      return 0.5 * (x * moved - j).squaredNorm();
    };
    const double h = 1e-5;
    double fd = (f_at(h) - f_at(-h)) / (2.0 * h);
    double analytic = curve_derivative_at_zero(g, v);
    worst_curve = std::max(
        worst_curve, std::abs(fd - analytic) / (1.0 + std::abs(analytic)));

    double scale = 1.0 + g.cwiseAbs().maxCoeff();
    for (Index a = 0; a < p; ++a)
      for (Index b = 0; b < d; ++b) {
        Matrix plus = v, minus = v;
        plus(a, b) += h;
        minus(a, b) -= h;
        double fd_ab = (0.5 * (x * plus - j).squaredNorm() -
                        0.5 * (x * minus - j).squaredNorm()) /
                       (2.0 * h);
        worst_euclid =
            std::max(worst_euclid, std::abs(fd_ab - g(a, b)) / scale);
      }
  }
  report("criterion 8c: curve and Euclidean gradient checks",
         worst_curve <= 1e-4 && worst_euclid <= 1e-5,
         "curve rel=" + num(worst_curve) + " euclid rel=" + num(worst_euclid));
}

// --- 8d. Fast vs dense Cayley ------------------------------------------------
void criterion_8d() {
  std::mt19937_64 rng(804);
  std::uniform_int_distribution<Index> p_dist(5, 14);
  std::uniform_real_distribution<double> tau_dist(1e-3, 2.0);
  double worst = 0.0;
  bool all_defined = true;
  for (int inst = 0; inst < 100; ++inst) {
    Index p = p_dist(rng);
    std::uniform_int_distribution<Index> d_dist(1, (p - 1) / 2);
    Index d = d_dist(rng);
    Matrix v = random_orthonormal_frame(p, d, rng).matrix();
    Matrix g = random_gaussian(p, d, rng);
    Matrix a1(p, 2 * d), a2(p, 2 * d);
    a1 << g, v;
    a2 << v, -g;
    double tau = tau_dist(rng);
    std::optional<Matrix> fast = cayley_step_fast(v, a1, a2, tau);
    if (!fast) {
      all_defined = false;
      continue;
    }
    Matrix dense = cayley_step_dense(v, a1, a2, tau);
    worst = std::max(worst, (*fast - dense).cwiseAbs().maxCoeff());
  }
  report("criterion 8d: fast vs dense Cayley on 100 instances",
         all_defined && worst <= 1e-8, "max diff=" + num(worst));
}

// --- 8e. Stationarity certificate on penalized fits --------------------------
void criterion_8e() {
  double worst_ratio = 0.0;
  for (int seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(900 + seed);
    testsupport::Planted planted =
        testsupport::make_planted(40, 8, 2, 4, 6.0, 0.3, rng);
    const ThresholdRule rule = seed % 3 == 0   ? ThresholdRule::soft
                               : seed % 3 == 1 ? ThresholdRule::hard
                                               : ThresholdRule::hard_ridge;
    const bool row_mode = seed < 14;
    Problem problem{planted.x,
                    row_mode ? ProblemVariant::penalized_row
                             : ProblemVariant::penalized_element,
                    rule};
    SolverConfig cfg;
    cfg.rank_r = 2;
    cfg.mode = row_mode ? OutlierMode::row : OutlierMode::element;
    cfg.lambda = 2.0;
    cfg.seed = static_cast<std::uint64_t>(seed);
    FitResult res = fit(problem, cfg);
    const double scale = planted.x.cwiseAbs().maxCoeff() *
                         std::sqrt(static_cast<double>(planted.x.rows()));
    worst_ratio = std::max(worst_ratio, res.stationarity_residual / scale);
  }
  report("criterion 8e: certificate on 20 penalized fits",
         worst_ratio <= 1e-4, "max residual/scale=" + num(worst_ratio));
}

// --- 8f. Trimmed-squares equivalence -----------------------------------------
void criterion_8f() {
  std::mt19937_64 rng(806);
  Matrix basis = random_orthonormal_frame(3, 3, rng).matrix();
  Matrix scores = random_gaussian(6, 2, rng);
  Vector scales(2);
  scales << 3.0, 2.0;
  Matrix x = scores * scales.asDiagonal() * basis.leftCols(2).transpose();
  x += 0.05 * random_gaussian(6, 3, rng);
  x.row(4) += 5.0 * basis.col(2).transpose();

  // Exhaustive trimming: drop one row (or none), take half the smallest
  // eigenvalue of the centered scatter of what remains.
  double oracle = 1e300;
  for (int skip = -1; skip < 6; ++skip) {
    std::vector<int> keep;
    for (int i = 0; i < 6; ++i)
      if (i != skip) keep.push_back(i);
    Matrix sub(static_cast<Index>(keep.size()), 3);
    for (size_t i = 0; i < keep.size(); ++i) sub.row(i) = x.row(keep[i]);
    Eigen::RowVectorXd mean = sub.colwise().mean();
    Matrix centered = sub.rowwise() - mean;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(centered.transpose() * centered);
    oracle = std::min(oracle, 0.5 * eig.eigenvalues()(0));
  }

  SolverConfig cfg;
  cfg.rank_r = 2;
  cfg.q = 1;
  cfg.eta = 0.0;
  cfg.nu = 0.7;
  cfg.tol_outer = 1e-12;
  cfg.tol_inner_s = 1e-13;
  cfg.tol_grad = 1e-10;
  cfg.tol_rel_f = 1e-14;
  cfg.max_outer = 2000;
  cfg.max_inner = 2000;
  Problem problem{x, ProblemVariant::constrained_row, ThresholdRule::soft};
  FitResult res = fit(problem, cfg);
  const double gap = std::abs(res.objective - oracle);
  report("criterion 8f: trimmed-squares equivalence on 6x3", gap <= 1e-8,
         "objective=" + num(res.objective) + " oracle=" + num(oracle) +
             " |gap|=" + num(gap));
}

// --- 8g. Bitwise determinism across thread counts ----------------------------
std::string serialize(const FitResult& res) {
  std::string out;
  auto append = [&out](const double* data, size_t count) {
    out.append(reinterpret_cast<const char*>(data), count * sizeof(double));
  };
  append(res.v_hat.data(), static_cast<size_t>(res.v_hat.size()));
  append(res.v_perp.data(), static_cast<size_t>(res.v_perp.size()));
  append(res.mu.data(), static_cast<size_t>(res.mu.size()));
  append(res.s.data(), static_cast<size_t>(res.s.size()));
  append(&res.objective, 1);
  append(&res.stationarity_residual, 1);
  for (long long row : res.flagged_rows)
    out.append(reinterpret_cast<const char*>(&row), sizeof(row));
  for (const auto& e : res.flagged_elements) {
    out.append(reinterpret_cast<const char*>(&e.first), sizeof(e.first));
    out.append(reinterpret_cast<const char*>(&e.second), sizeof(e.second));
  }
  out.push_back(res.converged ? '\1' : '\0');
  out.append(std::to_string(res.outer_iterations));
  return out;
}

void criterion_8g() {
  std::mt19937_64 rng(807);
  testsupport::Planted planted =
      testsupport::make_planted(60, 10, 3, 5, 6.0, 0.5, rng);
  Problem problem{planted.x, ProblemVariant::constrained_row,
                  ThresholdRule::soft};
  SolverConfig cfg;
  cfg.rank_r = 3;
  cfg.q = 5;
  cfg.nu = 0.7;
  cfg.seed = 21;
  std::vector<std::string> blobs;
  for (int threads : {1, 1, 2, 4, 0}) {
    cfg.threads = threads;
    blobs.push_back(serialize(fit(problem, cfg)));
  }
  bool identical = true;
  for (const std::string& blob : blobs) identical &= blob == blobs.front();
  report("criterion 8g: bitwise determinism across thread counts", identical,
         identical ? "all serializations identical"
                   : "serializations differ");
}

// --- 9. Error decay in n -----------------------------------------------------
void criterion_9() {
  const std::vector<Index> sizes = {50, 100, 200, 400};
  const int reps = 12;
  std::vector<std::vector<double>> errors(sizes.size(),
                                          std::vector<double>(reps, 0.0));
  for (size_t k = 0; k < sizes.size(); ++k) {
    SyntheticSpec spec = table1_spec(0, 77);
    spec.n = sizes[k];
    // The score frame is orthonormal, so holding the per-sample signal
    // distribution fixed across n requires the scales to grow like sqrt(n);
    // {60,40,20} is the n=100 baseline.
    const double growth = std::sqrt(static_cast<double>(sizes[k]) / 100.0);
    for (double& dv : spec.d_values) dv *= growth;
    const long long q = static_cast<long long>(0.04 * sizes[k] + 1e-9);
    spec.num_outliers = q / 2;
    SolverConfig cfg;
    for (int rep = 0; rep < reps; ++rep) {
      auto [x, truth] = generate(replicate(spec, rep));
      Problem problem{x, ProblemVariant::constrained_row,
                      ThresholdRule::soft};
      FitResult res = fit(problem, replicate_cfg(cfg, spec, q, rep));
      double cosine = evaluate(res, truth).affinity / 100.0;
      errors[k][static_cast<size_t>(rep)] = 1.0 - cosine * cosine;
    }
  }
  auto mean = [&](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  bool pass = true;
  std::string detail;
  for (size_t k = 0; k < sizes.size(); ++k) {
    if (k) detail += " ";
    detail += "n" + std::to_string(sizes[k]) + "=" + num(mean(errors[k]));
  }
  for (size_t k = 0; k + 1 < sizes.size(); ++k) {
    std::vector<double> diff(reps);
    for (int rep = 0; rep < reps; ++rep)
      diff[static_cast<size_t>(rep)] = errors[k + 1][static_cast<size_t>(rep)] -
                                       errors[k][static_cast<size_t>(rep)];
    double m = mean(diff);
    double var = 0.0;
    for (double drep : diff) var += (drep - m) * (drep - m);
    var /= static_cast<double>(reps - 1);
    double se = std::sqrt(var / static_cast<double>(reps));
    if (m > se) pass = false;
  }
  report("criterion 9: squared subspace error decays in n", pass, detail);
}

}  // namespace

int main(int argc, char** argv) {
  const double t0 = now_seconds();
  // Cheapest first so defects surface early; the batch timing pair runs
  // last because a single p=300 full fit takes many minutes of CPU.
  // Optional arguments select criteria by label, e.g. `acceptance_tests 9 6`.
  struct Entry {
    const char* label;
    void (*run)();
  };
  const Entry entries[] = {
      {"7", criterion_7},   {"8a", criterion_8a}, {"8b", criterion_8b},
      {"8c", criterion_8c}, {"8d", criterion_8d}, {"8e", criterion_8e},
      {"8f", criterion_8f}, {"8g", criterion_8g}, {"1", criterion_1},
      {"2", criterion_2},   {"3", criterion_3},   {"4", criterion_4},
      {"5", criterion_5},   {"9", criterion_9},   {"6", criterion_6},
  };
  std::printf("acceptance battery\n");
  for (const Entry& entry : entries) {
    bool selected = argc <= 1;
    for (int i = 1; i < argc && !selected; ++i)
      selected = std::strcmp(argv[i], entry.label) == 0;
    if (selected) entry.run();
  }
  std::printf("%s: %d failure(s), %.1fs total\n",
              g_failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED",
              g_failures, now_seconds() - t0);
  return g_failures;
}
