#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "banditgv/check.hpp"

namespace banditgv {

// Two-point coordinate estimator with an optimism buffer. Coordinate i of
// gtilde always holds the most recent directional value observed on i
// (zero before the first sample).
struct two_point_state {
  Eigen::VectorXd gtilde;
  double delta = 0.0;
  Eigen::VectorXi last_sample;  // diagnostics: round of last sample per coordinate
  std::vector<int> draw_log;    // 1-based sampled coordinate per round
};

two_point_state make_two_point_state(int d, double delta);

// Query pair w +/- delta * e_i (i is 1-based).
std::pair<Eigen::VectorXd, Eigen::VectorXd> query_points(const Eigen::VectorXd& w, int i,
                                                         double delta);

// Central-difference directional value (f_plus - f_minus) / (2 delta).
double directional_value(double f_plus, double f_minus, double delta);

struct estimate_result {
  Eigen::VectorXd g;
  double innovation_sq = 0.0;  // |g - gtilde|^2, concentrated on coordinate i
};

// Full-vector estimate from the observed directional value, then buffer
// update: g = d*(v - gtilde[i])*e_i + gtilde, gtilde[i] <- v.
estimate_result estimator_update(two_point_state& state, long t, int i, double v);

// Post-run statistics of the coordinate draw log.
struct rho_summary {
  long rounds = 0;
  int dim = 0;
  double mean_gap = 0.0;      // mean interarrival gap per coordinate
  double mean_coupon = 0.0;   // mean length of greedy all-coordinates windows
  long coupon_windows = 0;
  double mean_rho = 0.0;      // mean straddling-gap size over all (t, i)
  double se_rho = 0.0;
  double mean_max_rho = 0.0;  // mean over t of max_i straddling gap
  double se_max_rho = 0.0;
  double se_gap = 0.0;
  double se_coupon = 0.0;
  std::vector<std::pair<long, long>> histogram;  // (gap value, count) over (t, i)
};

rho_summary rho_statistics(const std::vector<int>& draw_log, int d);

}  // namespace banditgv
