#pragma once

#include <random>

#include "rocpca/common.hpp"

namespace rocpca {

// Max-abs deviation of V^T V from the identity.
double orthonormality_defect(const Matrix& v);

// Column frame with orthonormal columns; construction checks the defect
// against tol.
class OrthonormalFrame {
 public:
  explicit OrthonormalFrame(Matrix v, double tol = 1e-8);
  const Matrix& matrix() const noexcept { return v_; }
  Index rows() const noexcept { return v_.rows(); }
  Index cols() const noexcept { return v_.cols(); }

 private:
  Matrix v_;
};

// Standard-normal matrix filled in row-major scan order, so a given rng
// state yields one exact matrix.
Matrix random_gaussian(Index rows, Index cols, std::mt19937_64& rng);

// Haar-distributed p x d frame: thin QR of a Gaussian matrix with each
// column's sign fixed so the R diagonal is nonnegative.
OrthonormalFrame random_orthonormal_frame(Index p, Index d, std::mt19937_64& rng);

// Thin-QR re-orthonormalization with the same sign convention; maps an
// already orthonormal input to itself up to roundoff.
Matrix reorthonormalize(const Matrix& v);

// Cosine of the largest canonical angle between equal-size frames: the
// smallest singular value of A^T B. Inputs must have orthonormal columns.
double largest_canonical_angle_cosine(const Matrix& a, const Matrix& b);

// p x (p - d) orthonormal basis of the subspace orthogonal to the full
// column-rank p x d input.
Matrix orthonormal_complement(const Matrix& v);

// Finite entries, n >= 2 rows, p >= 2 columns.
void validate_data_matrix(const Matrix& x);

}  // namespace rocpca
