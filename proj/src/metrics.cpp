#include "banditgv/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace banditgv {

seed_stats aggregate(const std::vector<double>& values) {
  seed_stats out;
  out.n = static_cast<int>(values.size());
  if (values.empty()) return out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(out.n);
  if (out.n >= 2) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.se = std::sqrt(ss / static_cast<double>(out.n - 1) / static_cast<double>(out.n));
  }
  return out;
}

slope_fit_result slope_fit(const std::vector<std::pair<double, double>>& t_value) {
  slope_fit_result out;
  std::vector<double> xs, ys;
  for (const auto& [t, val] : t_value) {
    if (val > 0.0 && t > 0.0) {
      xs.push_back(std::log(t));
      ys.push_back(std::log(val));
    } else {
      ++out.skipped;
    }
  }
  out.used = static_cast<int>(xs.size());
  require(out.used >= 3, "slope_fit: need at least three positive points");
  const int n = out.used;
  double sx = 0.0, sy = 0.0;
  for (int k = 0; k < n; ++k) {
    sx += xs[k];
    sy += ys[k];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (int k = 0; k < n; ++k) {
    sxx += (xs[k] - mx) * (xs[k] - mx);
    sxy += (xs[k] - mx) * (ys[k] - my);
  }
  require(sxx > 0.0, "slope_fit: degenerate abscissae");
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  double rss = 0.0;
  for (int k = 0; k < n; ++k) {
    const double r = ys[k] - (out.intercept + out.slope * xs[k]);
    rss += r * r;
  }
  if (n > 2) out.half_width = std::sqrt(rss / (n - 2) / sxx);
  return out;
}

double path_length(const Eigen::MatrixXd& u) {
  double total = 0.0;
  for (long t = 1; t < u.cols(); ++t) total += (u.col(t) - u.col(t - 1)).norm();
  return total;
}

double comparator_total(const loss_sequence& seq, const Eigen::MatrixXd& u) {
  require(u.cols() == seq.horizon, "comparator_total: length mismatch");
  double total = 0.0;
  for (long t = 1; t <= seq.horizon; ++t) total += value(seq, t, u.col(t - 1));
  return total;
}

w_variation_result w_variation(const loss_sequence& seq, const Eigen::MatrixXd& centers) {
  w_variation_result out;
  const bool linear = seq.family == loss_family::stationary_linear ||
                      seq.family == loss_family::linear_drift;
  Eigen::MatrixXd grads(seq.dim, seq.horizon);
  if (linear) {
    for (long t = 1; t <= seq.horizon; ++t) grads.col(t - 1) = loss_vector(seq, t);
  } else {
    require(centers.cols() == seq.horizon,
            "w_variation: surrogate needs the center trajectory");
    out.surrogate = true;
    for (long t = 1; t <= seq.horizon; ++t) {
      grads.col(t - 1) = gradient(seq, t, centers.col(t - 1));
    }
  }
  const Eigen::VectorXd mean = grads.rowwise().mean();
  double total = 0.0;
  for (long t = 0; t < seq.horizon; ++t) total += (grads.col(t) - mean).squaredNorm();
  out.value = total;
  return out;
}

double small_loss_total(const loss_sequence& seq, const domain& dom) {
  if (seq.horizon == 0) return 0.0;
  const best_fixed_result fixed = best_fixed(seq, dom, 0.0);
  // Per-round minima repeat whenever the round's loss repeats; key rounds by
  // their defining data to avoid re-solving identical problems.
  std::map<std::vector<double>, double> memo;
  auto round_key = [&](long t) {
    std::vector<double> key;
    switch (seq.family) {
      case loss_family::stationary_linear:
        break;
      case loss_family::linear_drift: {
        const auto col = seq.ells.col(t - 1);
        key.assign(col.data(), col.data() + col.size());
        break;
      }
      case loss_family::quadratic_drift: {
        const auto col = seq.bs.col(t - 1);
        key.assign(col.data(), col.data() + col.size());
        break;
      }
      case loss_family::strong_quadratic: {
        const auto col = seq.centers.col(t - 1);
        key.assign(col.data(), col.data() + col.size());
        break;
      }
      case loss_family::piecewise_stationary:
        key.push_back(static_cast<double>(
            std::upper_bound(seq.segment_start.begin(), seq.segment_start.end(), t) -
            seq.segment_start.begin()));
        break;
    }
    return key;
  };
  double minima = 0.0;
  for (long t = 1; t <= seq.horizon; ++t) {
    const std::vector<double> key = round_key(t);
    auto it = memo.find(key);
    if (it == memo.end()) {
      it = memo.emplace(key, per_round_min(seq, t, dom)).first;
    }
    minima += it->second;
  }
  return fixed.total - minima;
}

}  // namespace banditgv
