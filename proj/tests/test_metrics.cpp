#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "banditgv/adversary.hpp"
#include "banditgv/check.hpp"
#include "banditgv/domain.hpp"
#include "banditgv/metrics.hpp"

using namespace banditgv;

namespace {

Eigen::VectorXd vec2(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

loss_sequence drifting_example() {
  Eigen::MatrixXd ells(2, 4);
  ells.col(0) = vec2(1.0, 0.0);
  ells.col(1) = vec2(0.0, 1.0);
  ells.col(2) = vec2(-1.0, 0.5);
  ells.col(3) = vec2(0.5, -0.5);
  return make_linear_drift(ells, 1.0);
}

}  // namespace

TEST_CASE("seed aggregation: mean and standard error") {
  const seed_stats s = aggregate({1.0, 2.0, 3.0, 4.0});
  CHECK(s.n == 4);
  CHECK(s.mean == 2.5);
  CHECK(s.se == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)).epsilon(1e-14));
  const seed_stats one = aggregate({7.0});
  CHECK(one.mean == 7.0);
  CHECK(one.se == 0.0);
}

TEST_CASE("log-log fit recovers exact power laws") {
  std::vector<std::pair<double, double>> pts;
  for (const double T : {2.0, 4.0, 8.0, 16.0}) pts.emplace_back(T, 3.0 * std::sqrt(T));
  const slope_fit_result fit = slope_fit(pts);
  CHECK(fit.used == 4);
  CHECK(fit.skipped == 0);
  CHECK(fit.slope == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(fit.half_width <= 1e-12);

  pts.emplace_back(32.0, 0.0);  // nonpositive values are excluded, not logged
  const slope_fit_result fit2 = slope_fit(pts);
  CHECK(fit2.used == 4);
  CHECK(fit2.skipped == 1);
  CHECK(fit2.slope == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS(slope_fit({{2.0, 1.0}, {4.0, 2.0}}));  // needs three positive points
}

TEST_CASE("comparator path length sums consecutive moves") {
  Eigen::MatrixXd u(2, 3);
  u.col(0) = vec2(0.0, 0.0);
  u.col(1) = vec2(1.0, 0.0);
  u.col(2) = vec2(1.0, 2.0);
  CHECK(path_length(u) == doctest::Approx(3.0).epsilon(1e-14));
  Eigen::MatrixXd fixed(2, 5);
  fixed.colwise() = vec2(0.3, -0.4);
  CHECK(path_length(fixed) == 0.0);
}

TEST_CASE("comparator totals and dynamic-regret bookkeeping") {
  const loss_sequence seq = drifting_example();
  Eigen::MatrixXd u(2, 4);
  u.colwise() = vec2(-1.0, -1.0);
  CHECK(comparator_total(seq, u) == doctest::Approx(-1.5).epsilon(1e-12));
  // per-round minimizers over the unit ball: -|ell_t|
  const domain ball = make_ball(2, 1.0);
  const Eigen::MatrixXd best = comparators(
      make_piecewise({make_stationary_linear(vec2(1.0, 0.0), 2, 1.0),
                      make_stationary_linear(vec2(0.0, -2.0), 2, 1.0)},
                     {2, 2}),
      ball);
  CHECK(path_length(best) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("gradient dispersion: exact for linear families") {
  const loss_sequence seq = drifting_example();
  const w_variation_result w = w_variation(seq, Eigen::MatrixXd::Zero(2, 4));
  CHECK_FALSE(w.surrogate);
  CHECK(w.value == doctest::Approx(3.4375).epsilon(1e-14));

  Eigen::MatrixXd centers(2, 3);
  centers.col(0) = vec2(0.3, 0.0);
  centers.col(1) = vec2(-0.3, 0.0);
  centers.col(2) = vec2(0.3, 0.0);
  const loss_sequence strong = make_strong_quadratic(0.5, centers, 0.7);
  Eigen::MatrixXd iterates(2, 3);
  iterates.colwise() = vec2(0.0, 0.0);
  const w_variation_result ws = w_variation(strong, iterates);
  CHECK(ws.surrogate);
  // gradients at the origin are -lambda c_t, so the dispersion is
  // lambda^2 sum |c_t - mean(c)|^2 = 0.25 * (0.04 + 0.16 + 0.04)
  CHECK(ws.value == doctest::Approx(0.06).epsilon(1e-12));
}

TEST_CASE("benign-gap total: zero iff a common interior minimizer exists") {
  const domain ball = make_ball(2, 1.0);
  Eigen::MatrixXd fixed(2, 4);
  fixed.colwise() = vec2(0.2, 0.1);
  const loss_sequence benign = make_strong_quadratic(0.5, fixed, 0.7);
  CHECK(small_loss_total(benign, ball) == doctest::Approx(0.0).epsilon(1e-12));

  Eigen::MatrixXd moving(2, 4);
  moving.col(0) = vec2(0.3, 0.0);
  moving.col(1) = vec2(-0.3, 0.0);
  moving.col(2) = vec2(0.3, 0.0);
  moving.col(3) = vec2(-0.3, 0.0);
  const loss_sequence drift = make_strong_quadratic(0.5, moving, 0.7);
  CHECK(small_loss_total(drift, ball) == doctest::Approx(0.09).epsilon(1e-10));
}
