#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "rocpca/threshold.hpp"

using namespace rocpca;

namespace {

// Penalties paired with each rule so that Theta(y) minimizes
// 0.5*(y-s)^2 + P(s). hard uses the l0 form, hard_ridge the l0+l2 form.
double penalty(ThresholdRule rule, double s, double lambda, double eta) {
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

double prox_cost(ThresholdRule rule, double y, double s, double lambda, double eta) {
  return 0.5 * (y - s) * (y - s) + penalty(rule, s, lambda, eta);
}

double grid_min_cost(ThresholdRule rule, double y, double lambda, double eta,
                     double step) {
  double hi = std::abs(y) + lambda + 1.0;
  double best = prox_cost(rule, y, 0.0, lambda, eta);
  for (double s = -hi; s <= hi; s += step)
    best = std::min(best, prox_cost(rule, y, s, lambda, eta));
  return best;
}

}  // namespace

TEST_SUITE("threshold") {

TEST_CASE("scalar rules on hand values") {
  CHECK(apply_scalar(ThresholdRule::soft, 2.0, 1.0) == doctest::Approx(1.0));
  CHECK(apply_scalar(ThresholdRule::soft, -2.0, 1.0) == doctest::Approx(-1.0));
  CHECK(apply_scalar(ThresholdRule::soft, 0.5, 1.0) == 0.0);
  CHECK(apply_scalar(ThresholdRule::soft, 1.0, 1.0) == 0.0);

  CHECK(apply_scalar(ThresholdRule::hard, 2.0, 1.0) == 2.0);
  CHECK(apply_scalar(ThresholdRule::hard, -3.0, 1.0) == -3.0);
  CHECK(apply_scalar(ThresholdRule::hard, 1.0, 1.0) == 0.0);
  CHECK(apply_scalar(ThresholdRule::hard, -0.5, 1.0) == 0.0);

  CHECK(apply_scalar(ThresholdRule::hard_ridge, -2.0, 1.0, 1e-3) ==
        doctest::Approx(-1.998001998002).epsilon(1e-9));
  CHECK(apply_scalar(ThresholdRule::hard_ridge, 1.0, 1.0, 0.5) == 0.0);
  CHECK(apply_scalar(ThresholdRule::hard_ridge, 3.0, 1.0, 0.5) == doctest::Approx(2.0));
}

TEST_CASE("psi is the residual after thresholding") {
  CHECK(psi_scalar(ThresholdRule::soft, 2.0, 1.0) == doctest::Approx(1.0));
  CHECK(psi_scalar(ThresholdRule::soft, 0.5, 1.0) == doctest::Approx(0.5));
  CHECK(psi_scalar(ThresholdRule::soft, -3.0, 1.0) == doctest::Approx(-1.0));
  CHECK(psi_scalar(ThresholdRule::hard, 2.0, 1.0) == 0.0);
  CHECK(psi_scalar(ThresholdRule::hard, 0.5, 1.0) == doctest::Approx(0.5));

  Matrix y(2, 2);
  y << 2.0, 0.5, -3.0, 0.0;
  Matrix p = psi_elementwise(ThresholdRule::soft, y, 1.0);
  CHECK(p(0, 0) == doctest::Approx(1.0));
  CHECK(p(0, 1) == doctest::Approx(0.5));
  CHECK(p(1, 0) == doctest::Approx(-1.0));
  CHECK(p(1, 1) == 0.0);
}

TEST_CASE("scalar rules are odd, shrinking, and monotone") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ts(-4.0, 4.0);
  std::uniform_real_distribution<double> ls(0.0, 2.0);
  for (ThresholdRule rule :
       {ThresholdRule::soft, ThresholdRule::hard, ThresholdRule::hard_ridge}) {
    for (int i = 0; i < 100000; ++i) {
      double t = ts(rng), lambda = ls(rng), eta = 0.25;
      double th = apply_scalar(rule, t, lambda, eta);
      CHECK(apply_scalar(rule, -t, lambda, eta) == -th);
      CHECK(std::abs(th) <= std::abs(t));
      double t2 = ts(rng);
      double lo = std::min(t, t2), hi = std::max(t, t2);
      CHECK(apply_scalar(rule, lo, lambda, eta) <= apply_scalar(rule, hi, lambda, eta));
    }
  }
}

TEST_CASE("scalar rules solve their proximal problems against a grid") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ys(-3.0, 3.0);
  std::uniform_real_distribution<double> ls(0.1, 2.0);
  for (ThresholdRule rule :
       {ThresholdRule::soft, ThresholdRule::hard, ThresholdRule::hard_ridge}) {
    for (double eta : {0.0, 1e-3, 0.5}) {
      for (int i = 0; i < 60; ++i) {
        double y = ys(rng), lambda = ls(rng);
        double theta = apply_scalar(rule, y, lambda, eta);
        double mine = prox_cost(rule, y, theta, lambda, eta);
        double grid = grid_min_cost(rule, y, lambda, eta, 1e-4);
        CHECK(mine <= grid + 1e-6);
      }
    }
  }
}

TEST_CASE("rowwise rule on hand values") {
  Matrix y(1, 2);
  y << 3.0, 4.0;
  Matrix s = apply_rowwise(ThresholdRule::soft, y, 1.0);
  CHECK(s(0, 0) == doctest::Approx(2.4).epsilon(1e-12));
  CHECK(s(0, 1) == doctest::Approx(3.2).epsilon(1e-12));

  Matrix kept = apply_rowwise(ThresholdRule::hard, y, 4.9);
  CHECK(kept(0, 0) == doctest::Approx(3.0));
  CHECK(kept(0, 1) == doctest::Approx(4.0));
  Matrix tied = apply_rowwise(ThresholdRule::hard, y, 5.0);
  CHECK(tied.cwiseAbs().maxCoeff() == 0.0);

  Matrix z = Matrix::Zero(2, 3);
  CHECK(apply_rowwise(ThresholdRule::soft, z, 0.5).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("rowwise rule solves the vector proximal problem on 2-vectors") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> comp(-2.5, 2.5);
  std::uniform_real_distribution<double> ls(0.1, 2.0);
  auto row_penalty = [&](ThresholdRule rule, double norm, double lambda, double eta) {
    return penalty(rule, norm, lambda, eta);
  };
  for (ThresholdRule rule :
       {ThresholdRule::soft, ThresholdRule::hard, ThresholdRule::hard_ridge}) {
    for (int i = 0; i < 12; ++i) {
      Matrix y(1, 2);
      y << comp(rng), comp(rng);
      double lambda = ls(rng), eta = (rule == ThresholdRule::hard_ridge) ? 0.3 : 0.0;
      Matrix s = apply_rowwise(rule, y, lambda, eta);
      double mine = 0.5 * (y - s).squaredNorm() + row_penalty(rule, s.norm(), lambda, eta);
      double best = mine + 1.0;
      double rmax = y.norm() + lambda + 1.0;
      for (double radius = 0.0; radius <= rmax; radius += 1e-3) {
        for (double angle = 0.0; angle < 2.0 * M_PI; angle += 0.01) {
          Matrix cand(1, 2);
          cand << radius * std::cos(angle), radius * std::sin(angle);
          double cost = 0.5 * (y - cand).squaredNorm() +
                        row_penalty(rule, radius, lambda, eta);
          best = std::min(best, cost);
        }
      }
      CHECK(mine <= best + 1e-5);
    }
  }
}

TEST_CASE("quantile element rule keeps the q largest magnitudes") {
  Matrix y(3, 2);
  y << 5.0, -1.0, 0.5, 2.0, -3.0, 0.0;
  Matrix s = quantile_threshold_elements(y, 2, 0.0);
  Matrix expect(3, 2);
  expect << 5.0, 0.0, 0.0, 0.0, -3.0, 0.0;
  CHECK((s - expect).cwiseAbs().maxCoeff() == 0.0);

  Matrix shrunk = quantile_threshold_elements(y, 2, 1.0);
  CHECK(shrunk(0, 0) == doctest::Approx(2.5));
  CHECK(shrunk(2, 0) == doctest::Approx(-1.5));
  CHECK(shrunk(1, 1) == 0.0);

  CHECK(quantile_threshold_elements(y, 0, 0.0).cwiseAbs().maxCoeff() == 0.0);
  Matrix all = quantile_threshold_elements(y, 6, 1.0);
  CHECK(all(1, 0) == doctest::Approx(0.25));
}

TEST_CASE("quantile ties break toward the earlier unit in scan order") {
  Matrix y(2, 2);
  y << 1.0, -1.0, 1.0, 0.0;
  Matrix s = quantile_threshold_elements(y, 2, 0.0);
  CHECK(s(0, 0) == 1.0);
  CHECK(s(0, 1) == -1.0);
  CHECK(s(1, 0) == 0.0);

  Matrix rows(3, 2);
  rows << 1.0, 0.0, 0.0, 1.0, 0.5, 0.0;
  Matrix kept = quantile_threshold_rows(rows, 1, 0.0);
  CHECK(kept(0, 0) == 1.0);
  CHECK(kept.row(1).cwiseAbs().maxCoeff() == 0.0);
  CHECK(kept.row(2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("quantile row rule on hand values and support size") {
  Matrix y(3, 2);
  y << 3.0, 4.0, 0.1, 0.0, 1.0, 0.0;
  Matrix s = quantile_threshold_rows(y, 1, 0.0);
  CHECK(s(0, 0) == 3.0);
  CHECK(s(0, 1) == 4.0);
  CHECK(s.bottomRows(2).cwiseAbs().maxCoeff() == 0.0);

  std::mt19937_64 rng(31);
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix big(20, 5);
  for (Index i = 0; i < big.rows(); ++i)
    for (Index j = 0; j < big.cols(); ++j) big(i, j) = g(rng);
  Matrix kept = quantile_threshold_rows(big, 7, 1e-3);
  int nonzero_rows = 0;
  for (Index i = 0; i < kept.rows(); ++i)
    if (kept.row(i).cwiseAbs().maxCoeff() > 0.0) ++nonzero_rows;
  CHECK(nonzero_rows == 7);

  Matrix kept_e = quantile_threshold_elements(big, 13, 1e-3);
  CHECK((kept_e.array() != 0.0).count() == 13);
}

TEST_CASE("quantile rules at eta 0 are idempotent") {
  std::mt19937_64 rng(37);
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix y(8, 3);
  for (Index i = 0; i < y.rows(); ++i)
    for (Index j = 0; j < y.cols(); ++j) y(i, j) = g(rng);
  Matrix once = quantile_threshold_rows(y, 3, 0.0);
  CHECK((quantile_threshold_rows(once, 3, 0.0) - once).cwiseAbs().maxCoeff() == 0.0);
  Matrix once_e = quantile_threshold_elements(y, 5, 0.0);
  CHECK((quantile_threshold_elements(once_e, 5, 0.0) - once_e).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("quantile element rule matches exhaustive support search on 2x3") {
  std::mt19937_64 rng(41);
  std::normal_distribution<double> g(0.0, 2.0);
  for (double eta : {0.0, 0.3}) {
    for (int trial = 0; trial < 20; ++trial) {
      Matrix m(2, 3);
      for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 3; ++j) m(i, j) = g(rng);
      for (long long q = 0; q <= 6; ++q) {
        Matrix s = quantile_threshold_elements(m, q, eta);
        double mine = 0.5 * (m - s).squaredNorm() + 0.5 * eta * s.squaredNorm();
        double best = std::numeric_limits<double>::infinity();
        for (unsigned mask = 0; mask < 64; ++mask) {
          if (__builtin_popcount(mask) != q) continue;
          double cost = 0.0;
          for (int k = 0; k < 6; ++k) {
            double mk = m(k / 3, k % 3);
            if (mask & (1u << k)) {
              double sk = mk / (1.0 + eta);
              cost += 0.5 * (mk - sk) * (mk - sk) + 0.5 * eta * sk * sk;
            } else {
              cost += 0.5 * mk * mk;
            }
          }
          best = std::min(best, cost);
        }
        CHECK(mine <= best + 1e-12);
      }
    }
  }
}

TEST_CASE("quantile budgets are validated") {
  Matrix y = Matrix::Zero(3, 2);
  CHECK_THROWS_AS(quantile_threshold_rows(y, -1, 0.0), Error);
  CHECK_THROWS_AS(quantile_threshold_rows(y, 4, 0.0), Error);
  CHECK_THROWS_AS(quantile_threshold_elements(y, 7, 0.0), Error);
  CHECK_THROWS_AS(quantile_threshold_elements(y, 2, -0.5), Error);
  CHECK_THROWS_AS(apply_scalar(ThresholdRule::soft, 1.0, -1.0), Error);
}

}  // TEST_SUITE
