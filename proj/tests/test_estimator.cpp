#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "banditgv/estimator.hpp"
#include "banditgv/rng.hpp"

using namespace banditgv;

TEST_CASE("query points flank the iterate on one coordinate") {
  Eigen::VectorXd w(3);
  w << 0.1, -0.2, 0.4;
  const auto [plus, minus] = query_points(w, 2, 0.05);
  CHECK(plus[0] == 0.1);
  CHECK(plus[1] == doctest::Approx(-0.15).epsilon(1e-15));
  CHECK(plus[2] == 0.4);
  CHECK(minus[1] == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK((plus - minus).norm() == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("central difference recovers linear and quadratic slopes") {
  CHECK(directional_value(0.3, -0.3, 0.05) == doctest::Approx(6.0).epsilon(1e-15));
  // f(x) = x^2 around 0.5 with delta 0.1: ((0.6)^2 - (0.4)^2) / 0.2 = 1
  CHECK(directional_value(0.36, 0.16, 0.1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("buffered update: jump on the sampled coordinate, buffer overwrite") {
  two_point_state st = make_two_point_state(2, 0.1);
  st.gtilde << 1.0, 2.0;
  const estimate_result res = estimator_update(st, 1, 1, 3.0);
  CHECK(res.g[0] == 5.0);  // gtilde + d (v - gtilde_i) on coordinate i
  CHECK(res.g[1] == 2.0);
  CHECK(res.innovation_sq == 16.0);
  CHECK(st.gtilde[0] == 3.0);
  CHECK(st.gtilde[1] == 2.0);
  CHECK(st.last_sample[0] == 1);
  CHECK(st.draw_log == std::vector<int>{1});

  two_point_state st3 = make_two_point_state(3, 0.1);
  const estimate_result res3 = estimator_update(st3, 1, 2, 1.0);
  CHECK(res3.g[0] == 0.0);
  CHECK(res3.g[1] == 3.0);
  CHECK(res3.g[2] == 0.0);
  CHECK(res3.innovation_sq == 9.0);
}

TEST_CASE("coordinate average of the estimates equals the linear gradient") {
  Eigen::VectorXd ell(4), w(4), gt(4);
  ell << 0.3, -1.2, 0.77, 2.5;
  w << 0.2, 0.1, -0.3, 0.0;
  gt << -0.5, 0.25, 1.0, -2.0;
  const double delta = 0.125;
  Eigen::VectorXd avg = Eigen::VectorXd::Zero(4);
  for (int i = 1; i <= 4; ++i) {
    two_point_state st = make_two_point_state(4, delta);
    st.gtilde = gt;
    const auto [plus, minus] = query_points(w, i, delta);
    const double v = directional_value(ell.dot(plus), ell.dot(minus), delta);
    avg += estimator_update(st, 1, i, v).g / 4.0;
  }
  CHECK((avg - ell).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("draw statistics on a small hand-checked log") {
  const std::vector<int> draws = {1, 2, 2, 1};
  const rho_summary s = rho_statistics(draws, 2);
  CHECK(s.rounds == 4);
  CHECK(s.mean_gap == 2.0);            // interarrivals 3 and 1
  CHECK(s.coupon_windows == 2);        // windows {1,2} and {2,1}
  CHECK(s.mean_coupon == 2.0);
  CHECK(s.mean_rho == doctest::Approx(17.0 / 8.0).epsilon(1e-15));
  CHECK(s.mean_max_rho == doctest::Approx(11.0 / 4.0).epsilon(1e-15));
  const std::vector<std::pair<long, long>> expected = {{1, 2}, {2, 3}, {3, 3}};
  CHECK(s.histogram == expected);
}

TEST_CASE("draw statistics when one coordinate is never sampled") {
  const std::vector<int> draws = {1, 1, 1};
  const rho_summary s = rho_statistics(draws, 2);
  CHECK(s.mean_gap == 1.0);
  CHECK(s.coupon_windows == 0);  // the all-coordinates window never completes
  CHECK(s.mean_coupon == 0.0);
  CHECK(s.mean_rho == doctest::Approx(2.5).epsilon(1e-15));  // (3*1 + 3*4) / 6
  CHECK(s.mean_max_rho == 4.0);  // the missing coordinate straddles T+1 always
  const std::vector<std::pair<long, long>> expected = {{1, 3}, {4, 3}};
  CHECK(s.histogram == expected);
}

TEST_CASE("histogram mass always covers every (round, coordinate) pair") {
  rng gen(3);
  for (const int d : {1, 2, 5}) {
    std::vector<int> draws;
    for (int t = 0; t < 500; ++t) draws.push_back(sample_coordinate(gen, d));
    const rho_summary s = rho_statistics(draws, d);
    long total = 0;
    double weighted = 0.0;
    for (const auto& [value, count] : s.histogram) {
      CHECK(count > 0);
      total += count;
      weighted += static_cast<double>(value) * static_cast<double>(count);
    }
    CHECK(total == 500L * d);
    CHECK(weighted / static_cast<double>(total) ==
          doctest::Approx(s.mean_rho).epsilon(1e-12));
  }
}

TEST_CASE("coordinate draws are roughly uniform") {
  rng gen(20);
  const int d = 3;
  std::vector<long> counts(d, 0);
  const long n = 60000;
  for (long t = 0; t < n; ++t) ++counts[sample_coordinate(gen, d) - 1];
  for (int i = 0; i < d; ++i) {
    CHECK(std::abs(static_cast<double>(counts[i]) / n - 1.0 / d) < 0.01);
  }
}
