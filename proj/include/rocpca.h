/* rocpca — robust subspace recovery with joint outlier identification.
 *
 * C interface to the solver library: opaque handles, integer status codes,
 * thread-local error messages. All matrices cross this boundary in dense
 * row-major double layout. Returned pointers from accessor functions stay
 * owned by their handle and live until the handle is freed.
 */
#ifndef ROCPCA_H
#define ROCPCA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ROCPCA_API __declspec(dllexport)
#else
#define ROCPCA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rocpca_status {
  ROCPCA_OK = 0,
  ROCPCA_ERR_INVALID_ARGUMENT = 1,
  ROCPCA_ERR_DIMENSION = 2,
  ROCPCA_ERR_CONFIG = 3,
  ROCPCA_ERR_DATA = 4,
  ROCPCA_ERR_FEASIBILITY = 5,
  ROCPCA_ERR_INTERNAL = 6
} rocpca_status;

/* Library semantic version, e.g. "1.0.0". */
ROCPCA_API const char* rocpca_version(void);

/* Message describing the most recent failure on this thread; empty string
 * when the last call succeeded. */
ROCPCA_API const char* rocpca_last_error(void);

/* ------------------------------------------------------------------ *
 * Configuration: string key/value pairs shared by the solver, the
 * synthetic generator, and the benchmark runner.
 *
 * Solver keys: rank, mode (row|element), q, rule (quantile|soft|hard|
 *   hard-ridge), lambda, eta, kappa, rho, window, nu, m0, n0, m1,
 *   tol-outer, tol-inner-s, tol-grad, tol-rel-f, max-outer, max-inner,
 *   seed, threads.
 * Generator keys: n, p, d (comma-separated decreasing values), sigma2,
 *   outliers, leverage — rank, mode and seed are shared with the solver.
 *
 * rule=quantile selects the budgeted (constrained) solver driven by q;
 * any other rule selects the penalized solver driven by lambda.
 * ------------------------------------------------------------------ */
typedef struct rocpca_config rocpca_config;

ROCPCA_API rocpca_config* rocpca_config_new(void);
ROCPCA_API void rocpca_config_free(rocpca_config* config);
ROCPCA_API rocpca_status rocpca_config_set(rocpca_config* config,
                                           const char* key, const char* value);
/* Writes the current value of key into buf (NUL-terminated, truncating). */
ROCPCA_API rocpca_status rocpca_config_get(const rocpca_config* config,
                                           const char* key, char* buf,
                                           size_t buflen);

/* ------------------------------------------------------------------ *
 * Datasets: immutable dense matrices.
 * ------------------------------------------------------------------ */
typedef struct rocpca_dataset rocpca_dataset;

/* Copies rows*cols doubles laid out row-major. NULL on failure. */
ROCPCA_API rocpca_dataset* rocpca_dataset_new(const double* values,
                                              int64_t rows, int64_t cols);
ROCPCA_API void rocpca_dataset_free(rocpca_dataset* dataset);
ROCPCA_API int64_t rocpca_dataset_rows(const rocpca_dataset* dataset);
ROCPCA_API int64_t rocpca_dataset_cols(const rocpca_dataset* dataset);
/* Row-major contents; valid until the dataset is freed. */
ROCPCA_API const double* rocpca_dataset_values(const rocpca_dataset* dataset);

/* ------------------------------------------------------------------ *
 * Fitting.
 * ------------------------------------------------------------------ */
typedef struct rocpca_result rocpca_result;

ROCPCA_API rocpca_status rocpca_fit(const rocpca_dataset* x,
                                    const rocpca_config* config,
                                    rocpca_result** out);

/* plan lists complement dimensions removed per batch and must sum to
 * p - rank; plan == NULL selects the built-in default plan. */
ROCPCA_API rocpca_status rocpca_batch_fit(const rocpca_dataset* x,
                                          const rocpca_config* config,
                                          const int64_t* plan, size_t plan_len,
                                          rocpca_result** out);

ROCPCA_API rocpca_status rocpca_sequential_fit(const rocpca_dataset* x,
                                               const rocpca_config* config,
                                               rocpca_result** out);

ROCPCA_API void rocpca_result_free(rocpca_result* result);

/* name: one of v_hat, v_perp, mu, s. Row-major; mu is 1 x d. */
ROCPCA_API rocpca_status rocpca_result_matrix(const rocpca_result* result,
                                              const char* name,
                                              const double** data,
                                              int64_t* rows, int64_t* cols);

/* name: one of objective, stationarity_residual, outer_iterations,
 * converged (0/1). */
ROCPCA_API rocpca_status rocpca_result_scalar(const rocpca_result* result,
                                              const char* name, double* out);

/* Flagged outlier support. Row mode: count row indices. Element mode:
 * count (row, column) pairs flattened as 2*count values. */
ROCPCA_API rocpca_status rocpca_result_flagged(const rocpca_result* result,
                                               const int64_t** values,
                                               int64_t* count,
                                               int* is_element_mode);

/* ------------------------------------------------------------------ *
 * Synthetic data with planted ground truth.
 * ------------------------------------------------------------------ */
typedef struct rocpca_simulation rocpca_simulation;

ROCPCA_API rocpca_status rocpca_simulate(const rocpca_config* config,
                                         rocpca_simulation** out);
ROCPCA_API void rocpca_simulation_free(rocpca_simulation* simulation);

/* name: one of x, v_star, v_perp_star, s_star. Row-major. */
ROCPCA_API rocpca_status rocpca_simulation_matrix(
    const rocpca_simulation* simulation, const char* name, const double** data,
    int64_t* rows, int64_t* cols);

/* Planted outliers, encoded like rocpca_result_flagged. */
ROCPCA_API rocpca_status rocpca_simulation_outliers(
    const rocpca_simulation* simulation, const int64_t** values,
    int64_t* count, int* is_element_mode);

/* ------------------------------------------------------------------ *
 * Benchmarks and diagnostics.
 * ------------------------------------------------------------------ */
typedef struct rocpca_table rocpca_table;

/* scenario: table1, table2, table4, table8, or pitfall. reps <= 0 selects
 * the scenario default. */
ROCPCA_API rocpca_status rocpca_bench_run(const char* scenario, int reps,
                                          uint64_t seed,
                                          const rocpca_config* config,
                                          rocpca_table** out);

/* Bundled reference values for a scenario. */
ROCPCA_API rocpca_status rocpca_bench_reference(const char* scenario,
                                                rocpca_table** out);

ROCPCA_API void rocpca_table_free(rocpca_table* table);
ROCPCA_API const char* rocpca_table_csv(const rocpca_table* table);
ROCPCA_API const char* rocpca_table_markdown(const rocpca_table* table);

/* Rank-reduction pitfall demo: cosine between the leading axis and the
 * corrupted row space, measured by SVD and by the closed form. */
ROCPCA_API rocpca_status rocpca_pitfall_demo(int64_t p, double epsilon,
                                             int64_t n, uint64_t seed,
                                             double* measured_cosine,
                                             double* theoretical_cosine);

/* 100 * cosine of the largest canonical angle between two frames given as
 * row-major p x r / p x d datasets with orthonormal columns. */
ROCPCA_API rocpca_status rocpca_subspace_affinity(const rocpca_dataset* a,
                                                  const rocpca_dataset* b,
                                                  double* out);

#ifdef __cplusplus
}
#endif

#endif /* ROCPCA_H */
