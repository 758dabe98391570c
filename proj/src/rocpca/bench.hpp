#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rocpca/batch.hpp"
#include "rocpca/solver.hpp"

namespace rocpca {

// Synthetic model: X = U diag(d_values) V*^T + (1 mu*^T + S*) Vperp*^T + E
// with U, [V* Vperp*] Haar-random, E iid N(0, sigma2). Row mode sets the
// first num_outliers rows of S* to leverage * 1^T; element mode sets
// num_outliers entries, drawn uniformly without replacement, to leverage.
struct SyntheticSpec {
  Index n = 0;
  Index p = 0;
  int r = 1;
  std::vector<double> d_values;  // strictly decreasing, positive
  double sigma2 = 0.0;
  Vector mu_star;                // size p - r, or empty for zeros
  OutlierMode outlier_mode = OutlierMode::row;
  long long num_outliers = 0;    // O (rows) or O^e (elements)
  double leverage = 0.0;         // row magnitude or element value
  std::uint64_t seed = 0;
};

struct GroundTruth {
  Matrix v_star;       // p x r
  Matrix v_perp_star;  // p x (p - r)
  Matrix s_star;       // n x (p - r)
  OutlierMode mode = OutlierMode::row;
  std::vector<long long> outlier_rows;                            // ascending
  std::vector<std::pair<long long, long long>> outlier_elements;  // row-major
};

struct EvalReport {
  double affinity = 0.0;  // 100 * cos(largest canonical angle)
  double masking = 0.0;   // fraction of true outliers not flagged
  double swamping = 0.0;  // fraction of clean units flagged
  int joint_detection = 0;  // 1 iff masking == 0
  std::optional<double> rav;  // clean-sample energy captured, when requested
  double wall_time_seconds = 0.0;
};

std::pair<Matrix, GroundTruth> generate(const SyntheticSpec& spec);

// Metrics against the planted truth. Index sets are compared literally;
// element-mode columns live in each frame's own basis, so callers wanting
// basis-independent element metrics should remap the truth first. RAV is
// filled when both the data matrix and the clean row set are provided.
EvalReport evaluate(const FitResult& result, const GroundTruth& truth,
                    const Matrix* x = nullptr,
                    const std::vector<long long>* clean_rows = nullptr);

// Top-r right singular vectors of the column-centered data — the
// non-robust baseline.
Matrix plain_pca_directions(const Matrix& x, int r);

// Rewrites planted element positions into the fitted complement's basis by
// greedily matching columns of the two frames (largest |dot| first, ties
// to the smaller index). Output is sorted row-major.
std::vector<std::pair<long long, long long>> remap_elements_to_basis(
    const std::vector<std::pair<long long, long long>>& elements,
    const Matrix& v_perp_star, const Matrix& v_perp_hat);

struct QSensitivityCell {
  double leverage = 0.0;
  long long num_outliers = 0;
  double alpha = 0.0;
  long long q = 0;
  double mean_affinity = 0.0;
  double mean_masking = 0.0;
  double mean_swamping = 0.0;
  double mean_jd = 0.0;
};

// Sweeps the budget q = floor(alpha * O) over the replicated base setup;
// every cell sees the same replicate data. Cells with q >= the number of
// candidate units are rejected.
std::vector<QSensitivityCell> run_q_sensitivity(const SyntheticSpec& base,
                                                const std::vector<double>& alphas,
                                                int reps,
                                                const SolverConfig& cfg);

struct ComparisonRow {
  Index n = 0;
  Index p = 0;
  double sigma2 = 0.0;
  long long num_outliers = 0;
  long long q = 0;
  std::string method;
  double mean_affinity = 0.0;
  double mean_seconds = 0.0;
};

// Mean affinity and wall time per setup and method; the budget is
// floor(alpha * O) per setup.
std::vector<ComparisonRow> run_comparison(const std::vector<SyntheticSpec>& specs,
                                          double alpha, int reps,
                                          bool include_plain_pca,
                                          const SolverConfig& cfg);

struct BatchComparisonRow {
  Index p = 0;
  std::string method;  // "full" or "batch"
  double mean_affinity = 0.0;
  double mean_seconds = 0.0;
};

// Paired full-vs-batch runs on identical replicates, batch plans from
// default_plan.
std::vector<BatchComparisonRow> run_batch_comparison(
    const std::vector<SyntheticSpec>& specs, double alpha, int reps,
    const SolverConfig& cfg);

struct PitfallReport {
  Index p = 0;
  double epsilon = 0.0;
  Index n = 0;
  double measured_cosine = 0.0;     // SVD of the generated corrupted matrix
  double theoretical_cosine = 0.0;  // 1 / sqrt(1 + eps^2 (p - 1))
};

// Rank-reduction pitfall: rows a_i * [1, eps, ..., eps] confine the row
// space, capping the affinity any SVD reduction can reach.
PitfallReport svd_pitfall_demo(Index p, double epsilon, Index n,
                               std::uint64_t seed = 0);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::string csv() const;
  std::string markdown() const;
};

// Shortest round-trip decimal form.
std::string format_double(double value);

// Named benchmark scenarios: table1, table2, table4, table8, pitfall.
std::vector<std::string> scenario_names();

// Runs a named scenario; reps <= 0 selects the scenario default. The
// config supplies solver knobs (threads in particular); ranks, modes and
// budgets come from the scenario itself.
Table run_scenario(const std::string& name, int reps, std::uint64_t seed,
                   const SolverConfig& cfg);

// Bundled reference values for the named scenario; unknown cells are "-".
Table reference_table(const std::string& name);

}  // namespace rocpca
