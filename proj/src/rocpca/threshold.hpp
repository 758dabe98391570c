#pragma once

#include "rocpca/common.hpp"
#include "rocpca/config.hpp"

namespace rocpca {

// Scalar threshold Theta(t; lambda). Ties |t| == lambda map to 0 for every
// rule. eta only affects hard_ridge.
double apply_scalar(ThresholdRule rule, double t, double lambda, double eta = 0.0);

// Entrywise Theta applied to y.
Matrix apply_elementwise(ThresholdRule rule, const Matrix& y, double lambda,
                         double eta = 0.0);

// Multivariate row rule: row i maps to (y_i / ||y_i||) * Theta(||y_i||; lambda);
// zero rows stay zero.
Matrix apply_rowwise(ThresholdRule rule, const Matrix& y, double lambda,
                     double eta = 0.0);

// Quantile variants keep the q largest units (entries by |.|, rows by l2
// norm), divide them by (1 + eta) and zero the rest. Ties are broken by
// row-major scan order (entries) or smaller row index (rows).
Matrix quantile_threshold_elements(const Matrix& y, long long q, double eta);
Matrix quantile_threshold_rows(const Matrix& y, long long q, double eta);

// psi(t; lambda) = t - Theta(t; lambda).
double psi_scalar(ThresholdRule rule, double t, double lambda, double eta = 0.0);
Matrix psi_elementwise(ThresholdRule rule, const Matrix& y, double lambda,
                       double eta = 0.0);
Matrix psi_rowwise(ThresholdRule rule, const Matrix& y, double lambda,
                   double eta = 0.0);

}  // namespace rocpca
