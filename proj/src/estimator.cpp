#include "banditgv/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace banditgv {

two_point_state make_two_point_state(int d, double delta) {
  require(d >= 1, "estimator: dimension must be positive");
  require(delta > 0.0, "estimator: exploration radius must be positive");
  two_point_state state;
  state.gtilde = Eigen::VectorXd::Zero(d);
  state.delta = delta;
  state.last_sample = Eigen::VectorXi::Zero(d);
  return state;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> query_points(const Eigen::VectorXd& w, int i,
                                                         double delta) {
  require(i >= 1 && i <= w.size(), "query_points: coordinate out of range");
  Eigen::VectorXd plus = w;
  Eigen::VectorXd minus = w;
  plus[i - 1] += delta;
  minus[i - 1] -= delta;
  return {plus, minus};
}

double directional_value(double f_plus, double f_minus, double delta) {
  require(delta > 0.0, "directional_value: exploration radius must be positive");
  return (f_plus - f_minus) / (2.0 * delta);
}

estimate_result estimator_update(two_point_state& state, long t, int i, double v) {
  const int d = static_cast<int>(state.gtilde.size());
  require(i >= 1 && i <= d, "estimator_update: coordinate out of range");
  estimate_result out;
  const double innovation = static_cast<double>(d) * (v - state.gtilde[i - 1]);
  out.g = state.gtilde;
  out.g[i - 1] += innovation;
  out.innovation_sq = innovation * innovation;
  state.gtilde[i - 1] = v;
  state.last_sample[i - 1] = static_cast<int>(t);
  state.draw_log.push_back(i);
  return out;
}

rho_summary rho_statistics(const std::vector<int>& draw_log, int d) {
  rho_summary out;
  out.dim = d;
  out.rounds = static_cast<long>(draw_log.size());
  if (draw_log.empty() || d < 1) return out;
  const long T = out.rounds;

  std::vector<std::vector<long>> occurrences(d);
  for (long t = 0; t < T; ++t) {
    const int i = draw_log[static_cast<std::size_t>(t)];
    occurrences[i - 1].push_back(t + 1);
  }

  // Interarrival gaps between consecutive samples of the same coordinate.
  double gap_sum = 0.0, gap_sq = 0.0;
  long gap_count = 0;
  for (int i = 0; i < d; ++i) {
    for (std::size_t j = 1; j < occurrences[i].size(); ++j) {
      const double g = static_cast<double>(occurrences[i][j] - occurrences[i][j - 1]);
      gap_sum += g;
      gap_sq += g * g;
      ++gap_count;
    }
  }
  if (gap_count > 0) {
    out.mean_gap = gap_sum / static_cast<double>(gap_count);
    const double var =
        std::max(0.0, gap_sq / static_cast<double>(gap_count) - out.mean_gap * out.mean_gap);
    out.se_gap = std::sqrt(var / static_cast<double>(gap_count));
  }

  // Greedy windows until all coordinates are seen (discard the partial tail).
  {
    std::vector<long> seen(d, 0);
    long stamp = 0;
    double win_sum = 0.0, win_sq = 0.0;
    long windows = 0;
    long start = 0;
    ++stamp;
    int distinct = 0;
    for (long t = 0; t < T; ++t) {
      const int i = draw_log[static_cast<std::size_t>(t)] - 1;
      if (seen[i] != stamp) {
        seen[i] = stamp;
        ++distinct;
      }
      if (distinct == d) {
        const double len = static_cast<double>(t - start + 1);
        win_sum += len;
        win_sq += len * len;
        ++windows;
        start = t + 1;
        ++stamp;
        distinct = 0;
      }
    }
    out.coupon_windows = windows;
    if (windows > 0) {
      out.mean_coupon = win_sum / static_cast<double>(windows);
      const double var = std::max(
          0.0, win_sq / static_cast<double>(windows) - out.mean_coupon * out.mean_coupon);
      out.se_coupon = std::sqrt(var / static_cast<double>(windows));
    }
  }

  // Straddling gap for (t, i): distance between the last sample of i before t
  // and the first at or after t, with 0 and T+1 standing in at the ends.
  {
    std::map<long, long> hist;
    double rho_sum = 0.0, rho_sq = 0.0;
    const double samples = static_cast<double>(T) * static_cast<double>(d);
    for (int i = 0; i < d; ++i) {
      const auto& occ = occurrences[i];
      auto add = [&](long value, long count) {
        if (count <= 0) return;
        hist[value] += count;
        rho_sum += static_cast<double>(value) * static_cast<double>(count);
        rho_sq += static_cast<double>(value) * static_cast<double>(value) *
                  static_cast<double>(count);
      };
      if (occ.empty()) {
        add(T + 1, T);
        continue;
      }
      add(occ.front(), occ.front());
      for (std::size_t j = 1; j < occ.size(); ++j) {
        add(occ[j] - occ[j - 1], occ[j] - occ[j - 1]);
      }
      add(T + 1 - occ.back(), T - occ.back());
    }
    out.mean_rho = rho_sum / samples;
    const double var = std::max(0.0, rho_sq / samples - out.mean_rho * out.mean_rho);
    out.se_rho = std::sqrt(var / samples);
    out.histogram.assign(hist.begin(), hist.end());
  }

  // Per-round maximum straddling gap across coordinates.
  {
    std::vector<std::size_t> next_idx(d, 0);
    double max_sum = 0.0, max_sq = 0.0;
    for (long t = 1; t <= T; ++t) {
      double round_max = 0.0;
      for (int i = 0; i < d; ++i) {
        const auto& occ = occurrences[i];
        while (next_idx[i] < occ.size() && occ[next_idx[i]] < t) ++next_idx[i];
        const long prev = next_idx[i] > 0 ? occ[next_idx[i] - 1] : 0;
        const long next = next_idx[i] < occ.size() ? occ[next_idx[i]] : T + 1;
        round_max = std::max(round_max, static_cast<double>(next - prev));
      }
      max_sum += round_max;
      max_sq += round_max * round_max;
    }
    out.mean_max_rho = max_sum / static_cast<double>(T);
    const double var = std::max(
        0.0, max_sq / static_cast<double>(T) - out.mean_max_rho * out.mean_max_rho);
    out.se_max_rho = std::sqrt(var / static_cast<double>(T));
  }

  return out;
}

}  // namespace banditgv
