#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "banditgv/adversary.hpp"
#include "banditgv/check.hpp"
#include "banditgv/domain.hpp"

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

TEST_CASE("linear drift: values, gradients, variation, best fixed point") {
  const loss_sequence seq = drifting_example();
  CHECK(seq.horizon == 4);
  CHECK(value(seq, 3, vec2(2.0, 2.0)) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK((gradient(seq, 2, vec2(0.3, -0.4)) - vec2(0.0, 1.0)).norm() == 0.0);
  CHECK((loss_vector(seq, 4) - vec2(0.5, -0.5)).norm() == 0.0);
  // sum over t>=2 of |ell_t - ell_{t-1}|^2 = 2 + 1.25 + 3.25
  CHECK(gradient_variation(seq) == doctest::Approx(6.5).epsilon(1e-15));

  const domain box = make_box(vec2(-1.0, -1.0), vec2(1.0, 1.0));
  const best_fixed_result best = best_fixed(seq, box, 0.0);
  CHECK(best.x[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(best.x[1] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(best.total == doctest::Approx(-1.5).epsilon(1e-12));
}

TEST_CASE("alternating linear: closed-form variation and zero-sum optimum") {
  const loss_sequence seq = make_alternating_linear(vec2(0.6, 0.8), 8, 1.0);
  CHECK((loss_vector(seq, 1) - vec2(0.6, 0.8)).norm() == 0.0);
  CHECK((loss_vector(seq, 2) + vec2(0.6, 0.8)).norm() == 0.0);
  CHECK(gradient_variation(seq) == doctest::Approx(28.0).epsilon(1e-15));
  const domain ball = make_ball(2, 1.0);
  CHECK(best_fixed(seq, ball, 0.0).total == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("stationary linear has zero variation and a boundary optimum") {
  const loss_sequence seq = make_stationary_linear(vec2(0.6, 0.8), 10, 1.0);
  CHECK(seq.G == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gradient_variation(seq) == 0.0);
  const domain ball = make_ball(2, 1.0);
  const best_fixed_result best = best_fixed(seq, ball, 0.0);
  CHECK(best.x[0] == doctest::Approx(-0.6).epsilon(1e-12));
  CHECK(best.x[1] == doctest::Approx(-0.8).epsilon(1e-12));
  CHECK(best.total == doctest::Approx(-10.0).epsilon(1e-12));
}

TEST_CASE("strong quadratic: gradients, variation, projected mean center") {
  Eigen::MatrixXd centers(2, 4);
  centers.col(0) = vec2(0.3, 0.0);
  centers.col(1) = vec2(-0.3, 0.0);
  centers.col(2) = vec2(0.3, 0.0);
  centers.col(3) = vec2(-0.3, 0.0);
  const loss_sequence seq = make_strong_quadratic(0.5, centers, 0.7);
  CHECK(seq.lambda == 0.5);
  const Eigen::VectorXd x = vec2(0.1, 0.2);
  CHECK(value(seq, 1, x) ==
        doctest::Approx(0.25 * (0.04 + 0.04)).epsilon(1e-14));
  CHECK((gradient(seq, 1, x) - 0.5 * (x - centers.col(0))).norm() <= 1e-15);
  // each switch contributes lambda^2 |c0 - c1|^2 = 0.25 * 0.36
  CHECK(gradient_variation(seq) == doctest::Approx(3.0 * 0.09).epsilon(1e-14));

  const domain ball = make_ball(2, 1.0);
  const best_fixed_result best = best_fixed(seq, ball, 0.0);
  CHECK((best.x - vec2(0.0, 0.0)).norm() <= 1e-12);  // projected mean center
  CHECK(best.total == doctest::Approx(4.0 * 0.25 * 0.09).epsilon(1e-12));

  const loss_sequence alt =
      make_alternating_centers(0.5, vec2(0.3, 0.0), vec2(-0.3, 0.0), 4, 0.7);
  CHECK(gradient_variation(alt) == doctest::Approx(gradient_variation(seq)).epsilon(1e-15));
  CHECK(value(alt, 2, x) == doctest::Approx(value(seq, 2, x)).epsilon(1e-15));
}

TEST_CASE("quadratic drift: curvature oracle and symmetry guard") {
  Eigen::MatrixXd A(2, 2);
  A << 0.8, 0.0, 0.0, 0.0;
  Eigen::MatrixXd bs(2, 3);
  bs.col(0) = vec2(0.3, 0.4);
  bs.col(1) = vec2(-0.3, -0.4);
  bs.col(2) = vec2(0.3, 0.4);
  const loss_sequence seq = make_quadratic_drift(A, bs, 1.3);
  CHECK(seq.L == doctest::Approx(0.8).epsilon(1e-12));
  const Eigen::VectorXd x = vec2(0.5, -0.2);
  CHECK(value(seq, 1, x) ==
        doctest::Approx(0.5 * 0.8 * 0.25 + 0.15 - 0.08).epsilon(1e-14));
  CHECK((gradient(seq, 2, x) - (A * x + bs.col(1))).norm() <= 1e-15);
  CHECK(gradient_variation(seq) == doctest::Approx(2.0 * 1.0).epsilon(1e-14));

  Eigen::MatrixXd skew(2, 2);
  skew << 0.0, 1.0, -1.0, 0.0;
  CHECK_THROWS_AS(make_quadratic_drift(skew, bs, 1.3), config_error);
  Eigen::MatrixXd indefinite(2, 2);
  indefinite << 1.0, 0.0, 0.0, -0.5;
  CHECK_THROWS_AS(make_quadratic_drift(indefinite, bs, 1.3), config_error);
}

TEST_CASE("piecewise stationary: segment lookup and comparators") {
  const loss_sequence a = make_stationary_linear(vec2(1.0, 0.0), 3, 1.0);
  const loss_sequence b = make_stationary_linear(vec2(0.0, -1.0), 2, 1.0);
  const loss_sequence seq = make_piecewise({a, b}, {3, 2});
  CHECK(seq.horizon == 5);
  CHECK((loss_vector(seq, 3) - vec2(1.0, 0.0)).norm() == 0.0);
  CHECK((loss_vector(seq, 4) - vec2(0.0, -1.0)).norm() == 0.0);
  // one interior switch
  CHECK(gradient_variation(seq) == doctest::Approx(2.0).epsilon(1e-14));

  const domain ball = make_ball(2, 1.0);
  const Eigen::MatrixXd u = comparators(seq, ball);
  CHECK(u.cols() == 5);
  CHECK((u.col(1) - vec2(-1.0, 0.0)).norm() <= 1e-12);
  CHECK((u.col(4) - vec2(0.0, 1.0)).norm() <= 1e-12);
}

TEST_CASE("per-round minimum uses the inflated set") {
  const loss_sequence seq = make_stationary_linear(vec2(0.6, 0.8), 4, 0.5);
  const domain ball = make_ball(2, 1.0);
  // inflation radius G/L = 2, so the linear minimum sits at radius 3
  CHECK(per_round_min(seq, 2, ball) == doctest::Approx(-3.0).epsilon(1e-12));
}

TEST_CASE("distance and inflated projection") {
  const domain ball = make_ball(2, 1.0);
  CHECK(distance_to(ball, vec2(3.0, 4.0)) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(distance_to(ball, vec2(0.3, 0.0)) == 0.0);
  const Eigen::VectorXd p = project_inflated(ball, 1.0, vec2(6.0, 8.0));
  CHECK(p.norm() == doctest::Approx(2.0).epsilon(1e-14));

  const domain box = make_box(vec2(-1.0, -1.0), vec2(1.0, 1.0));
  CHECK(distance_to(box, vec2(2.0, 0.0)) == doctest::Approx(1.0).epsilon(1e-14));
  const Eigen::VectorXd q = project_inflated(box, 0.5, vec2(2.0, 3.0));
  CHECK(distance_to(box, q) <= 0.5 + 1e-12);
}
