#include "rocpca.h"

#include <charconv>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "rocpca/batch.hpp"
#include "rocpca/bench.hpp"
#include "rocpca/frame.hpp"
#include "rocpca/solver.hpp"

namespace {

thread_local std::string g_last_error;

rocpca_status map_code(rocpca::ErrorCode code) {
  switch (code) {
    case rocpca::ErrorCode::invalid_argument:
      return ROCPCA_ERR_INVALID_ARGUMENT;
    case rocpca::ErrorCode::dimension:
      return ROCPCA_ERR_DIMENSION;
    case rocpca::ErrorCode::config:
      return ROCPCA_ERR_CONFIG;
    case rocpca::ErrorCode::data:
      return ROCPCA_ERR_DATA;
    case rocpca::ErrorCode::feasibility:
      return ROCPCA_ERR_FEASIBILITY;
    case rocpca::ErrorCode::internal:
      return ROCPCA_ERR_INTERNAL;
  }
  return ROCPCA_ERR_INTERNAL;
}

template <typename Fn>
rocpca_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return ROCPCA_OK;
  } catch (const rocpca::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ROCPCA_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ROCPCA_ERR_INTERNAL;
  }
}

using rocpca::require;

bool parse_ll(const std::string& text, long long& out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc() && res.ptr == end;
}

bool parse_u64(const std::string& text, std::uint64_t& out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc() && res.ptr == end;
}

bool parse_double(const std::string& text, double& out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc() && res.ptr == end;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string item = comma == std::string::npos
                           ? text.substr(start)
                           : text.substr(start, comma - start);
    double value = 0.0;
    require(parse_double(item, value), rocpca::ErrorCode::config,
            "cannot parse '" + item + "' as a number");
    values.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

std::vector<double> to_row_major(const rocpca::Matrix& m) {
  std::vector<double> out(static_cast<size_t>(m.size()));
  for (rocpca::Index i = 0; i < m.rows(); ++i)
    for (rocpca::Index j = 0; j < m.cols(); ++j)
      out[static_cast<size_t>(i * m.cols() + j)] = m(i, j);
  return out;
}

}  // namespace

struct rocpca_config {
  rocpca::SolverConfig solver;
  std::string rule = "quantile";
  long long sim_n = 100;
  long long sim_p = 10;
  std::vector<double> sim_d = {60.0, 40.0, 20.0};
  double sim_sigma2 = 1.0;
  long long sim_outliers = 0;
  double sim_leverage = 0.0;
};

struct rocpca_dataset {
  rocpca::Matrix m;
  std::vector<double> row_major;
};

struct rocpca_result {
  rocpca::FitResult fit;
  std::vector<double> v_hat, v_perp, mu, s;
  std::vector<int64_t> flagged;
  bool element_mode = false;
};

struct rocpca_simulation {
  std::vector<double> x, v_star, v_perp_star, s_star;
  int64_t n = 0, p = 0, r = 0, d = 0;
  std::vector<int64_t> outliers;
  bool element_mode = false;
};

struct rocpca_table {
  std::string csv;
  std::string markdown;
};

namespace {

rocpca::Problem make_problem(const rocpca::Matrix& x, const rocpca_config& c) {
  const bool row = c.solver.mode == rocpca::OutlierMode::row;
  rocpca::ProblemVariant variant;
  rocpca::ThresholdRule rule = rocpca::ThresholdRule::soft;
  if (c.rule == "quantile") {
    variant = row ? rocpca::ProblemVariant::constrained_row
                  : rocpca::ProblemVariant::constrained_element;
  } else {
    variant = row ? rocpca::ProblemVariant::penalized_row
                  : rocpca::ProblemVariant::penalized_element;
    if (c.rule == "soft") rule = rocpca::ThresholdRule::soft;
    else if (c.rule == "hard") rule = rocpca::ThresholdRule::hard;
    else rule = rocpca::ThresholdRule::hard_ridge;
  }
  return rocpca::Problem{x, variant, rule};
}

rocpca_result* make_result(rocpca::FitResult&& fit, bool element_mode) {
  auto* out = new rocpca_result;
  out->fit = std::move(fit);
  out->v_hat = to_row_major(out->fit.v_hat);
  out->v_perp = to_row_major(out->fit.v_perp);
  out->mu = to_row_major(out->fit.mu.transpose());
  out->s = to_row_major(out->fit.s);
  out->element_mode = element_mode;
  if (element_mode) {
    out->flagged.reserve(out->fit.flagged_elements.size() * 2);
    for (const auto& e : out->fit.flagged_elements) {
      out->flagged.push_back(e.first);
      out->flagged.push_back(e.second);
    }
  } else {
    out->flagged.assign(out->fit.flagged_rows.begin(),
                        out->fit.flagged_rows.end());
  }
  return out;
}

rocpca::SyntheticSpec make_spec(const rocpca_config& c) {
  rocpca::SyntheticSpec spec;
  spec.n = c.sim_n;
  spec.p = c.sim_p;
  spec.r = c.solver.rank_r;
  spec.d_values = c.sim_d;
  spec.sigma2 = c.sim_sigma2;
  spec.outlier_mode = c.solver.mode;
  spec.num_outliers = c.sim_outliers;
  spec.leverage = c.sim_leverage;
  spec.seed = c.solver.seed;
  return spec;
}

}  // namespace

extern "C" {

const char* rocpca_version(void) { return "1.0.0"; }

const char* rocpca_last_error(void) { return g_last_error.c_str(); }

rocpca_config* rocpca_config_new(void) {
  return new (std::nothrow) rocpca_config;
}

void rocpca_config_free(rocpca_config* config) { delete config; }

rocpca_status rocpca_config_set(rocpca_config* config, const char* key,
                                const char* value) {
  return guarded([&] {
    require(config && key && value, rocpca::ErrorCode::invalid_argument,
            "config, key and value must not be NULL");
    const std::string k = key;
    const std::string v = value;
    auto as_ll = [&](long long& slot) {
      long long parsed = 0;
      require(parse_ll(v, parsed), rocpca::ErrorCode::config,
              "cannot parse '" + v + "' as an integer for key '" + k + "'");
      slot = parsed;
    };
    auto as_int = [&](int& slot) {
      long long parsed = 0;
      require(parse_ll(v, parsed), rocpca::ErrorCode::config,
              "cannot parse '" + v + "' as an integer for key '" + k + "'");
      slot = static_cast<int>(parsed);
    };
    auto as_double = [&](double& slot) {
      double parsed = 0.0;
      require(parse_double(v, parsed), rocpca::ErrorCode::config,
              "cannot parse '" + v + "' as a number for key '" + k + "'");
      slot = parsed;
    };
    rocpca::SolverConfig& s = config->solver;
    if (k == "rank") as_int(s.rank_r);
    else if (k == "mode") {
      require(v == "row" || v == "element", rocpca::ErrorCode::config,
              "mode must be 'row' or 'element'");
      s.mode = v == "row" ? rocpca::OutlierMode::row
                          : rocpca::OutlierMode::element;
    } else if (k == "q") as_ll(s.q);
    else if (k == "rule") {
      require(v == "quantile" || v == "soft" || v == "hard" || v == "hard-ridge",
              rocpca::ErrorCode::config,
              "rule must be quantile, soft, hard, or hard-ridge");
      config->rule = v;
    } else if (k == "lambda") as_double(s.lambda);
    else if (k == "eta") as_double(s.eta);
    else if (k == "kappa") as_double(s.kappa);
    else if (k == "rho") as_double(s.rho);
    else if (k == "window") as_int(s.window_T);
    else if (k == "nu") as_double(s.nu);
    else if (k == "m0") as_int(s.m0);
    else if (k == "n0") as_int(s.n0);
    else if (k == "m1") as_int(s.m1);
    else if (k == "tol-outer") as_double(s.tol_outer);
    else if (k == "tol-inner-s") as_double(s.tol_inner_s);
    else if (k == "tol-grad") as_double(s.tol_grad);
    else if (k == "tol-rel-f") as_double(s.tol_rel_f);
    else if (k == "max-outer") as_int(s.max_outer);
    else if (k == "max-inner") as_int(s.max_inner);
    else if (k == "seed") {
      std::uint64_t parsed = 0;
      require(parse_u64(v, parsed), rocpca::ErrorCode::config,
              "cannot parse '" + v + "' as an unsigned integer for key 'seed'");
      s.seed = parsed;
    } else if (k == "threads") as_int(s.threads);
    else if (k == "n") as_ll(config->sim_n);
    else if (k == "p") as_ll(config->sim_p);
    else if (k == "d") config->sim_d = parse_double_list(v);
    else if (k == "sigma2") as_double(config->sim_sigma2);
    else if (k == "outliers") as_ll(config->sim_outliers);
    else if (k == "leverage") as_double(config->sim_leverage);
    else
      rocpca::fail(rocpca::ErrorCode::config, "unknown config key '" + k + "'");
  });
}

rocpca_status rocpca_config_get(const rocpca_config* config, const char* key,
                                char* buf, size_t buflen) {
  return guarded([&] {
    require(config && key && buf && buflen >= 1,
            rocpca::ErrorCode::invalid_argument,
            "config, key and a nonempty buffer are required");
    const std::string k = key;
    const rocpca::SolverConfig& s = config->solver;
    std::string text;
    if (k == "rank") text = std::to_string(s.rank_r);
    else if (k == "mode")
      text = s.mode == rocpca::OutlierMode::row ? "row" : "element";
    else if (k == "q") text = std::to_string(s.q);
    else if (k == "rule") text = config->rule;
    else if (k == "lambda") text = rocpca::format_double(s.lambda);
    else if (k == "eta") text = rocpca::format_double(s.eta);
    else if (k == "kappa") text = rocpca::format_double(s.kappa);
    else if (k == "rho") text = rocpca::format_double(s.rho);
    else if (k == "window") text = std::to_string(s.window_T);
    else if (k == "nu") text = rocpca::format_double(s.nu);
    else if (k == "m0") text = std::to_string(s.m0);
    else if (k == "n0") text = std::to_string(s.n0);
    else if (k == "m1") text = std::to_string(s.m1);
    else if (k == "tol-outer") text = rocpca::format_double(s.tol_outer);
    else if (k == "tol-inner-s") text = rocpca::format_double(s.tol_inner_s);
    else if (k == "tol-grad") text = rocpca::format_double(s.tol_grad);
    else if (k == "tol-rel-f") text = rocpca::format_double(s.tol_rel_f);
    else if (k == "max-outer") text = std::to_string(s.max_outer);
    else if (k == "max-inner") text = std::to_string(s.max_inner);
    else if (k == "seed") text = std::to_string(s.seed);
    else if (k == "threads") text = std::to_string(s.threads);
    else if (k == "n") text = std::to_string(config->sim_n);
    else if (k == "p") text = std::to_string(config->sim_p);
    else if (k == "d") {
      for (size_t i = 0; i < config->sim_d.size(); ++i) {
        if (i) text += ',';
        text += rocpca::format_double(config->sim_d[i]);
      }
    } else if (k == "sigma2") text = rocpca::format_double(config->sim_sigma2);
    else if (k == "outliers") text = std::to_string(config->sim_outliers);
    else if (k == "leverage") text = rocpca::format_double(config->sim_leverage);
    else
      rocpca::fail(rocpca::ErrorCode::config, "unknown config key '" + k + "'");
    size_t n = std::min(text.size(), buflen - 1);
    std::memcpy(buf, text.data(), n);
    buf[n] = '\0';
  });
}

rocpca_dataset* rocpca_dataset_new(const double* values, int64_t rows,
                                   int64_t cols) {
  rocpca_dataset* out = nullptr;
  rocpca_status status = guarded([&] {
    require(values != nullptr, rocpca::ErrorCode::invalid_argument,
            "values must not be NULL");
    require(rows >= 1 && cols >= 1, rocpca::ErrorCode::invalid_argument,
            "rows and cols must be >= 1");
    auto* d = new rocpca_dataset;
    d->m.resize(rows, cols);
    for (int64_t i = 0; i < rows; ++i)
      for (int64_t j = 0; j < cols; ++j) d->m(i, j) = values[i * cols + j];
    d->row_major.assign(values, values + rows * cols);
    out = d;
  });
  return status == ROCPCA_OK ? out : nullptr;
}

void rocpca_dataset_free(rocpca_dataset* dataset) { delete dataset; }

int64_t rocpca_dataset_rows(const rocpca_dataset* dataset) {
  return dataset ? dataset->m.rows() : 0;
}

int64_t rocpca_dataset_cols(const rocpca_dataset* dataset) {
  return dataset ? dataset->m.cols() : 0;
}

const double* rocpca_dataset_values(const rocpca_dataset* dataset) {
  return dataset ? dataset->row_major.data() : nullptr;
}

rocpca_status rocpca_fit(const rocpca_dataset* x, const rocpca_config* config,
                         rocpca_result** out) {
  return guarded([&] {
    require(x && config && out, rocpca::ErrorCode::invalid_argument,
            "x, config and out must not be NULL");
    rocpca::Problem problem = make_problem(x->m, *config);
    rocpca::FitResult fit = rocpca::fit(problem, config->solver);
    *out = make_result(std::move(fit),
                       config->solver.mode == rocpca::OutlierMode::element);
  });
}

rocpca_status rocpca_batch_fit(const rocpca_dataset* x,
                               const rocpca_config* config, const int64_t* plan,
                               size_t plan_len, rocpca_result** out) {
  return guarded([&] {
    require(x && config && out, rocpca::ErrorCode::invalid_argument,
            "x, config and out must not be NULL");
    rocpca::Problem problem = make_problem(x->m, *config);
    rocpca::FitResult fit;
    if (plan == nullptr) {
      fit = rocpca::batch_fit(problem, config->solver);
    } else {
      require(plan_len >= 1, rocpca::ErrorCode::invalid_argument,
              "plan_len must be >= 1 when plan is given");
      std::vector<long long> sizes(plan, plan + plan_len);
      fit = rocpca::batch_fit(problem, config->solver, sizes);
    }
    *out = make_result(std::move(fit),
                       config->solver.mode == rocpca::OutlierMode::element);
  });
}

rocpca_status rocpca_sequential_fit(const rocpca_dataset* x,
                                    const rocpca_config* config,
                                    rocpca_result** out) {
  return guarded([&] {
    require(x && config && out, rocpca::ErrorCode::invalid_argument,
            "x, config and out must not be NULL");
    rocpca::Problem problem = make_problem(x->m, *config);
    rocpca::FitResult fit = rocpca::sequential_fit(problem, config->solver);
    *out = make_result(std::move(fit),
                       config->solver.mode == rocpca::OutlierMode::element);
  });
}

void rocpca_result_free(rocpca_result* result) { delete result; }

rocpca_status rocpca_result_matrix(const rocpca_result* result,
                                   const char* name, const double** data,
                                   int64_t* rows, int64_t* cols) {
  return guarded([&] {
    require(result && name && data && rows && cols,
            rocpca::ErrorCode::invalid_argument,
            "result, name and output pointers must not be NULL");
    const std::string n = name;
    if (n == "v_hat") {
      *data = result->v_hat.data();
      *rows = result->fit.v_hat.rows();
      *cols = result->fit.v_hat.cols();
    } else if (n == "v_perp") {
      *data = result->v_perp.data();
      *rows = result->fit.v_perp.rows();
      *cols = result->fit.v_perp.cols();
    } else if (n == "mu") {
      *data = result->mu.data();
      *rows = 1;
      *cols = result->fit.mu.size();
    } else if (n == "s") {
      *data = result->s.data();
      *rows = result->fit.s.rows();
      *cols = result->fit.s.cols();
    } else {
      rocpca::fail(rocpca::ErrorCode::invalid_argument,
                   "unknown result matrix '" + n +
                       "'; valid names: v_hat, v_perp, mu, s");
    }
  });
}

rocpca_status rocpca_result_scalar(const rocpca_result* result,
                                   const char* name, double* out) {
  return guarded([&] {
    require(result && name && out, rocpca::ErrorCode::invalid_argument,
            "result, name and out must not be NULL");
    const std::string n = name;
    if (n == "objective") *out = result->fit.objective;
    else if (n == "stationarity_residual")
      *out = result->fit.stationarity_residual;
    else if (n == "outer_iterations")
      *out = static_cast<double>(result->fit.outer_iterations);
    else if (n == "converged") *out = result->fit.converged ? 1.0 : 0.0;
    else
      rocpca::fail(rocpca::ErrorCode::invalid_argument,
                   "unknown result scalar '" + n +
                       "'; valid names: objective, stationarity_residual, "
                       "outer_iterations, converged");
  });
}

rocpca_status rocpca_result_flagged(const rocpca_result* result,
                                    const int64_t** values, int64_t* count,
                                    int* is_element_mode) {
  return guarded([&] {
    require(result && values && count && is_element_mode,
            rocpca::ErrorCode::invalid_argument,
            "result and output pointers must not be NULL");
    *values = result->flagged.data();
    *is_element_mode = result->element_mode ? 1 : 0;
    *count = result->element_mode
                 ? static_cast<int64_t>(result->flagged.size() / 2)
                 : static_cast<int64_t>(result->flagged.size());
  });
}

rocpca_status rocpca_simulate(const rocpca_config* config,
                              rocpca_simulation** out) {
  return guarded([&] {
    require(config && out, rocpca::ErrorCode::invalid_argument,
            "config and out must not be NULL");
    auto [x, truth] = rocpca::generate(make_spec(*config));
    auto* sim = new rocpca_simulation;
    sim->n = x.rows();
    sim->p = x.cols();
    sim->r = truth.v_star.cols();
    sim->d = truth.v_perp_star.cols();
    sim->x = to_row_major(x);
    sim->v_star = to_row_major(truth.v_star);
    sim->v_perp_star = to_row_major(truth.v_perp_star);
    sim->s_star = to_row_major(truth.s_star);
    sim->element_mode = truth.mode == rocpca::OutlierMode::element;
    if (sim->element_mode) {
      for (const auto& e : truth.outlier_elements) {
        sim->outliers.push_back(e.first);
        sim->outliers.push_back(e.second);
      }
    } else {
      sim->outliers.assign(truth.outlier_rows.begin(),
                           truth.outlier_rows.end());
    }
    *out = sim;
  });
}

void rocpca_simulation_free(rocpca_simulation* simulation) {
  delete simulation;
}

rocpca_status rocpca_simulation_matrix(const rocpca_simulation* simulation,
                                       const char* name, const double** data,
                                       int64_t* rows, int64_t* cols) {
  return guarded([&] {
    require(simulation && name && data && rows && cols,
            rocpca::ErrorCode::invalid_argument,
            "simulation, name and output pointers must not be NULL");
    const std::string n = name;
    if (n == "x") {
      *data = simulation->x.data();
      *rows = simulation->n;
      *cols = simulation->p;
    } else if (n == "v_star") {
      *data = simulation->v_star.data();
      *rows = simulation->p;
      *cols = simulation->r;
    } else if (n == "v_perp_star") {
      *data = simulation->v_perp_star.data();
      *rows = simulation->p;
      *cols = simulation->d;
    } else if (n == "s_star") {
      *data = simulation->s_star.data();
      *rows = simulation->n;
      *cols = simulation->d;
    } else {
      rocpca::fail(rocpca::ErrorCode::invalid_argument,
                   "unknown simulation matrix '" + n +
                       "'; valid names: x, v_star, v_perp_star, s_star");
    }
  });
}

rocpca_status rocpca_simulation_outliers(const rocpca_simulation* simulation,
                                         const int64_t** values,
                                         int64_t* count, int* is_element_mode) {
  return guarded([&] {
    require(simulation && values && count && is_element_mode,
            rocpca::ErrorCode::invalid_argument,
            "simulation and output pointers must not be NULL");
    *values = simulation->outliers.data();
    *is_element_mode = simulation->element_mode ? 1 : 0;
    *count = simulation->element_mode
                 ? static_cast<int64_t>(simulation->outliers.size() / 2)
                 : static_cast<int64_t>(simulation->outliers.size());
  });
}

rocpca_status rocpca_bench_run(const char* scenario, int reps, uint64_t seed,
                               const rocpca_config* config,
                               rocpca_table** out) {
  return guarded([&] {
    require(scenario && config && out, rocpca::ErrorCode::invalid_argument,
            "scenario, config and out must not be NULL");
    rocpca::Table table =
        rocpca::run_scenario(scenario, reps, seed, config->solver);
    auto* t = new rocpca_table;
    t->csv = table.csv();
    t->markdown = table.markdown();
    *out = t;
  });
}

rocpca_status rocpca_bench_reference(const char* scenario, rocpca_table** out) {
  return guarded([&] {
    require(scenario && out, rocpca::ErrorCode::invalid_argument,
            "scenario and out must not be NULL");
    rocpca::Table table = rocpca::reference_table(scenario);
    auto* t = new rocpca_table;
    t->csv = table.csv();
    t->markdown = table.markdown();
    *out = t;
  });
}

void rocpca_table_free(rocpca_table* table) { delete table; }

const char* rocpca_table_csv(const rocpca_table* table) {
  return table ? table->csv.c_str() : "";
}

const char* rocpca_table_markdown(const rocpca_table* table) {
  return table ? table->markdown.c_str() : "";
}

rocpca_status rocpca_pitfall_demo(int64_t p, double epsilon, int64_t n,
                                  uint64_t seed, double* measured_cosine,
                                  double* theoretical_cosine) {
  return guarded([&] {
    require(measured_cosine && theoretical_cosine,
            rocpca::ErrorCode::invalid_argument,
            "output pointers must not be NULL");
    rocpca::PitfallReport report = rocpca::svd_pitfall_demo(p, epsilon, n, seed);
    *measured_cosine = report.measured_cosine;
    *theoretical_cosine = report.theoretical_cosine;
  });
}

rocpca_status rocpca_subspace_affinity(const rocpca_dataset* a,
                                       const rocpca_dataset* b, double* out) {
  return guarded([&] {
    require(a && b && out, rocpca::ErrorCode::invalid_argument,
            "a, b and out must not be NULL");
    *out = 100.0 * rocpca::largest_canonical_angle_cosine(a->m, b->m);
  });
}

}  // extern "C"
