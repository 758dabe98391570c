#include "rocpca/frame.hpp"

#include <cmath>

namespace rocpca {

double orthonormality_defect(const Matrix& v) {
  Matrix gram = v.transpose() * v;
  gram.diagonal().array() -= 1.0;
  return gram.cwiseAbs().maxCoeff();
}

OrthonormalFrame::OrthonormalFrame(Matrix v, double tol) : v_(std::move(v)) {
  require(v_.rows() >= v_.cols() && v_.cols() >= 1, ErrorCode::dimension,
          "frame must be tall: rows >= cols >= 1");
  double defect = orthonormality_defect(v_);
  require(std::isfinite(defect) && defect <= tol, ErrorCode::invalid_argument,
          "columns are not orthonormal (defect " + std::to_string(defect) + ")");
}

Matrix random_gaussian(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) g(i, j) = normal(rng);
  return g;
}

namespace {

Matrix thin_qr_sign_fixed(const Matrix& g, Index d) {
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(g.rows(), d);
  const Matrix& qr_mat = qr.matrixQR();
  for (Index j = 0; j < d; ++j)
    if (qr_mat(j, j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

}  // namespace

OrthonormalFrame random_orthonormal_frame(Index p, Index d, std::mt19937_64& rng) {
  require(p >= d && d >= 1, ErrorCode::dimension,
          "frame dimensions must satisfy p >= d >= 1");
  Matrix g = random_gaussian(p, d, rng);
  return OrthonormalFrame(thin_qr_sign_fixed(g, d));
}

Matrix reorthonormalize(const Matrix& v) {
  require(v.rows() >= v.cols() && v.cols() >= 1, ErrorCode::dimension,
          "frame must be tall: rows >= cols >= 1");
  return thin_qr_sign_fixed(v, v.cols());
}

double largest_canonical_angle_cosine(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::dimension,
          "frames must have equal dimensions");
  require(a.cols() >= 1 && a.rows() >= a.cols(), ErrorCode::dimension,
          "frames must be tall: rows >= cols >= 1");
  Eigen::JacobiSVD<Matrix> svd(a.transpose() * b);
  double c = svd.singularValues().minCoeff();
  return std::min(c, 1.0);
}

Matrix orthonormal_complement(const Matrix& v) {
  require(v.rows() > v.cols() && v.cols() >= 1, ErrorCode::dimension,
          "complement needs a strictly tall matrix");
  Eigen::HouseholderQR<Matrix> qr(v);
  Matrix q = qr.householderQ() * Matrix::Identity(v.rows(), v.rows());
  return q.rightCols(v.rows() - v.cols());
}

void validate_data_matrix(const Matrix& x) {
  require(x.rows() >= 2 && x.cols() >= 2, ErrorCode::data,
          "data matrix needs at least 2 rows and 2 columns");
  require(x.allFinite(), ErrorCode::data, "data matrix has non-finite entries");
}

}  // namespace rocpca
