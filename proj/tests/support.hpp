#pragma once

#include <random>
#include <vector>

#include "rocpca/frame.hpp"

namespace testsupport {

using rocpca::Index;
using rocpca::Matrix;
using rocpca::Vector;

inline bool bitwise_equal(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a.array() == b.array()).all();
}

inline bool bitwise_equal(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return false;
  return (a.array() == b.array()).all();
}

// Low-rank data with a few rows shifted inside the orthogonal complement,
// so the planted principal subspace and the planted outlier rows are both
// known exactly.
struct Planted {
  Matrix x;
  Matrix v_star;       // p x r planted principal directions
  Matrix v_perp_star;  // p x (p - r) planted complement
  std::vector<long long> outlier_rows;
};

inline Planted make_planted(Index n, Index p, int r, int n_out, double shift,
                            double noise, std::mt19937_64& rng) {
  Planted out;
  Matrix basis = rocpca::random_orthonormal_frame(p, p, rng).matrix();
  out.v_star = basis.leftCols(r);
  out.v_perp_star = basis.rightCols(p - r);
  Matrix scores = rocpca::random_gaussian(n, r, rng);
  Vector scales = Vector::LinSpaced(r, 6.0, 3.0);
  out.x = scores * scales.asDiagonal() * out.v_star.transpose();
  out.x += noise * rocpca::random_gaussian(n, p, rng);
  Vector w = Vector::Zero(p - r);
  w(0) = 1.0;
  Vector dir = out.v_perp_star * w;
  for (int i = 0; i < n_out; ++i) {
    out.x.row(i) += shift * dir.transpose();
    out.outlier_rows.push_back(i);
  }
  return out;
}

}  // namespace testsupport
