#pragma once

#include <utility>
#include <vector>

#include "banditgv/adversary.hpp"
#include "banditgv/record.hpp"

namespace banditgv {

struct seed_stats {
  double mean = 0.0;
  double se = 0.0;  // standard error of the mean
  int n = 0;
};
seed_stats aggregate(const std::vector<double>& values);

struct slope_fit_result {
  double slope = 0.0;
  double half_width = 0.0;  // from residual variance of the log-log fit
  double intercept = 0.0;
  int used = 0;     // points with positive value
  int skipped = 0;  // nonpositive points excluded
};
// Least-squares slope of log(value) against log(T).
slope_fit_result slope_fit(const std::vector<std::pair<double, double>>& t_value);

// Sum over t >= 2 of |u_t - u_{t-1}| for a d x T comparator matrix.
double path_length(const Eigen::MatrixXd& u);

// Sum of f_t(u_t); dynamic regret is the recorded loss total minus this.
double comparator_total(const loss_sequence& seq, const Eigen::MatrixXd& u);

// Gradient dispersion around the mean gradient. Exact for linear families;
// otherwise evaluated on the realized center iterates (surrogate).
struct w_variation_result {
  double value = 0.0;
  bool surrogate = false;
};
w_variation_result w_variation(const loss_sequence& seq, const Eigen::MatrixXd& centers);

// Cumulative best fixed loss over X minus the summed per-round minima over
// the inflated set; per-round minima are memoized across repeated rounds.
double small_loss_total(const loss_sequence& seq, const domain& dom);

}  // namespace banditgv
