#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "banditgv/adversary.hpp"
#include "banditgv/barrier.hpp"
#include "banditgv/domain.hpp"
#include "banditgv/rng.hpp"

using namespace banditgv;

namespace {

Eigen::VectorXd vec2(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

double barrier_slope(double x, double a, double b) {
  return 1.0 / (b - x) - 1.0 / (x - a);
}

double F_of(double x, double S, double c, double eta, double a, double b) {
  return eta * (S + c * std::sqrt(barrier_eigen(x, a, b))) + barrier_slope(x, a, b);
}

}  // namespace

TEST_CASE("barrier curvature spot values") {
  CHECK(barrier_eigen(0.0, -1.0, 1.0) == 2.0);
  CHECK(barrier_eigen(0.5, 0.0, 2.0) ==
        doctest::Approx(4.444444444444445).epsilon(1e-15));
  // curvature blows up toward either wall
  CHECK(barrier_eigen(0.999, -1.0, 1.0) > 1e5);
}

TEST_CASE("actions sit one curvature-scaled offset from the iterate") {
  const domain box = make_box(vec2(-1.0, -1.0), vec2(-0.5, 3.0));
  one_point_state st = make_one_point_state(box);
  CHECK(st.w[0] == doctest::Approx(-0.75).epsilon(1e-15));  // box center
  CHECK(st.w[1] == doctest::Approx(1.0).epsilon(1e-15));

  const domain sym = make_box(vec2(-1.0, -1.0), vec2(1.0, 1.0));
  one_point_state ctr = make_one_point_state(sym);
  const Eigen::VectorXd x = play_action(ctr, sym, 1, 1);
  CHECK(x[0] == doctest::Approx(0.7071067811865475).epsilon(1e-14));
  CHECK(x[1] == 0.0);
  const Eigen::VectorXd xm = play_action(ctr, sym, 1, -1);
  CHECK(xm[0] == doctest::Approx(-0.7071067811865475).epsilon(1e-14));
  CHECK(contains(sym, 0.0, x, 0.0));
}

TEST_CASE("optimism halves the buffered observation spread per coordinate") {
  const domain sym = make_box(Eigen::VectorXd::Constant(1, -1.0),
                              Eigen::VectorXd::Constant(1, 1.0));
  one_point_state st = make_one_point_state(sym);
  st.r_plus[0] = 1.0;
  st.r_minus[0] = 0.0;
  const Eigen::VectorXd gtilde = one_point_optimism(st, sym);
  CHECK(gtilde[0] == doctest::Approx(0.7071067811865476).epsilon(1e-14));
}

TEST_CASE("coordinate-equation roots match grid-bracketed references") {
  struct root_case {
    double S, c, eta, a, b, expected;
  };
  const root_case cases[] = {
      {5.0, 0.3, 0.1, -1.0, 1.0, -0.2555664552117546},
      {0.0, 0.0, 0.1, -1.0, 1.0, 0.0},
      {0.0, 0.0, 0.1, 0.0, 4.0, 2.0},
      {-12.0, 0.9, 0.05, -0.5, 2.0, 1.1331157025882383},
      {40.0, -2.0, 0.02, -3.0, 1.0, -2.0742139812767464},
  };
  for (const root_case& rc : cases) {
    const solve_result res = solve_coordinate(rc.S, rc.c, rc.eta, rc.a, rc.b, 1e-12);
    CHECK(res.root == doctest::Approx(rc.expected).epsilon(1e-9));
    CHECK(res.root > rc.a);
    CHECK(res.root < rc.b);
    CHECK(res.iterations <= 200);
  }
}

TEST_CASE("the root equation is strictly increasing when |eta c| < 1") {
  rng gen(8);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = -1.0 - uniform01(gen);
    const double b = a + 0.5 + 2.0 * uniform01(gen);
    const double eta = 0.02 + 0.3 * uniform01(gen);
    const double c = (2.0 * uniform01(gen) - 1.0) * 0.95 / eta;
    const double S = (2.0 * uniform01(gen) - 1.0) * 10.0;
    double prev = -std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 50; ++k) {
      const double x = a + (b - a) * k / 51.0;
      const double val = F_of(x, S, c, eta, a, b);
      CHECK(val > prev);
      prev = val;
    }
  }
}

TEST_CASE("after one observation per (coordinate, sign), optimism equals the gradient") {
  // Linear losses make the buffered values exact, so the optimistic estimate
  // collapses onto the true gradient regardless of the iterate history.
  const domain box = make_box(vec2(-1.0, -0.5), vec2(0.5, 2.0));
  const Eigen::VectorXd ell = vec2(0.3, -0.7);
  one_point_state st = make_one_point_state(box);
  for (int i = 1; i <= 2; ++i) {
    for (const int eps : {1, -1}) {
      const Eigen::VectorXd x = play_action(st, box, i, eps);
      const double v = ell.dot(x);
      if (eps > 0) {
        st.r_plus[i - 1] = v;
      } else {
        st.r_minus[i - 1] = v;
      }
    }
  }
  const Eigen::VectorXd gtilde = one_point_optimism(st, box);
  CHECK((gtilde - ell).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("full one-point runs stay strictly interior and well-formed") {
  const domain box = make_box(vec2(-1.0, -1.0), vec2(1.0, 1.0));
  const loss_sequence seq = make_stationary_linear(vec2(0.4, 0.3), 512, 1.0);
  const run_record rec = run_one_point(seq, box, 512, 12);
  REQUIRE(rec.columns.size() == static_cast<std::size_t>(6 + 2 * 2));
  CHECK(rec.columns[0] == "t");
  CHECK(rec.columns[1] == "i");
  CHECK(rec.columns[2] == "eps");
  CHECK(rec.warnings == 0);
  for (long t = 0; t < 512; ++t) {
    const int i = static_cast<int>(rec.rows(t, 1));
    const int eps = static_cast<int>(rec.rows(t, 2));
    CHECK(i >= 1);
    CHECK(i <= 2);
    CHECK((eps == 1 || eps == -1));
    for (int k = 0; k < 4; ++k) {
      CHECK(std::abs(rec.rows(t, 3 + k)) < 1.0);  // w then x, strictly inside
    }
  }
  // determinism
  const run_record again = run_one_point(seq, box, 512, 12);
  CHECK((rec.rows - again.rows).cwiseAbs().maxCoeff() == 0.0);
  CHECK(rec.regret_center == again.regret_center);
}

TEST_CASE("an aggressive step size only halves the affected coordinate") {
  const domain box = make_box(vec2(-1.0, -1.0), vec2(1.0, 1.0));
  const loss_sequence seq = make_stationary_linear(vec2(0.9, 0.9), 64, 1.0);
  one_point_overrides ov;
  ov.eta = 4.0;  // forces |eta c| >= 1 on observed coordinates
  ov.record_rows = false;
  const run_record rec = run_one_point(seq, box, 64, 5, ov);
  CHECK(rec.warnings > 0);
  CHECK(std::isfinite(rec.regret_center));
}
