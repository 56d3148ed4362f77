#include "banditgv/barrier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "banditgv/metrics.hpp"

namespace banditgv {

namespace {

double barrier_deriv(double x, double a, double b) {
  return 1.0 / (b - x) - 1.0 / (x - a);
}

double barrier_second(double x, double a, double b) {
  const double da = x - a;
  const double db = b - x;
  return 1.0 / (da * da) + 1.0 / (db * db);
}

bool linear_rounds(const loss_sequence& seq) {
  switch (seq.family) {
    case loss_family::stationary_linear:
    case loss_family::linear_drift:
      return true;
    case loss_family::piecewise_stationary:
      for (const loss_sequence& piece : seq.segments) {
        if (piece.family != loss_family::stationary_linear) return false;
      }
      return true;
    default:
      return false;
  }
}

}  // namespace

double barrier_eigen(double w, double a, double b) {
  require(a < w && w < b, "barrier_eigen: point must be strictly interior");
  return barrier_second(w, a, b);
}

one_point_state make_one_point_state(const domain& dom) {
  require_config(dom.kind == domain_kind::box, "one-point learner needs a box domain");
  one_point_state st;
  st.w = 0.5 * (dom.lower + dom.upper);
  st.gsum = Eigen::VectorXd::Zero(dom.dim);
  st.r_plus = Eigen::VectorXd::Zero(dom.dim);
  st.r_minus = Eigen::VectorXd::Zero(dom.dim);
  return st;
}

Eigen::VectorXd one_point_optimism(const one_point_state& st, const domain& dom) {
  const int d = dom.dim;
  Eigen::VectorXd gtilde(d);
  for (int k = 0; k < d; ++k) {
    const double lam = barrier_eigen(st.w[k], dom.lower[k], dom.upper[k]);
    gtilde[k] = 0.5 * std::sqrt(lam) * (st.r_plus[k] - st.r_minus[k]);
  }
  return gtilde;
}

Eigen::VectorXd play_action(const one_point_state& st, const domain& dom, int i, int eps) {
  require(i >= 1 && i <= dom.dim, "play_action: coordinate out of range");
  require(eps == 1 || eps == -1, "play_action: sign must be +1 or -1");
  const double lam = barrier_eigen(st.w[i - 1], dom.lower[i - 1], dom.upper[i - 1]);
  Eigen::VectorXd x = st.w;
  x[i - 1] += static_cast<double>(eps) / std::sqrt(lam);
  for (int k = 0; k < dom.dim; ++k) {
    require(dom.lower[k] < x[k] && x[k] < dom.upper[k],
            "play_action: query left the interior");
  }
  return x;
}

solve_result solve_coordinate(double S, double c, double eta, double a, double b,
                              double tol) {
  require(a < b, "solve_coordinate: empty interval");
  require(eta > 0.0 && tol > 0.0, "solve_coordinate: eta and tol must be positive");
  require(std::abs(eta * c) < 1.0,
          "solve_coordinate: |eta c| >= 1 breaks monotonicity; shrink eta");
  auto F = [&](double x) {
    return eta * (S + c * std::sqrt(barrier_second(x, a, b))) + barrier_deriv(x, a, b);
  };
  const double width = b - a;
  double lo = a + width * 1e-12;
  double hi = b - width * 1e-12;
  solve_result out;
  if (F(lo) >= 0.0) {  // root pinned against the lower edge
    out.root = lo;
    return out;
  }
  if (F(hi) <= 0.0) {  // root pinned against the upper edge
    out.root = hi;
    return out;
  }
  double mid = 0.5 * (lo + hi);
  for (out.iterations = 1; out.iterations <= 200; ++out.iterations) {
    mid = 0.5 * (lo + hi);
    const double val = F(mid);
    if (std::abs(val) <= tol || (hi - lo) <= tol) {
      out.root = mid;
      return out;
    }
    if (val > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  require(false, "solve_coordinate: bisection failed to converge in 200 iterations");
  return out;
}

one_point_round one_point_play(const one_point_state& st, const domain& dom, rng& gen) {
  one_point_round rd;
  rd.i = sample_coordinate(gen, dom.dim);
  rd.eps = sample_sign(gen);
  rd.z = rd.eps > 0 ? st.r_plus[rd.i - 1] : st.r_minus[rd.i - 1];
  rd.x = play_action(st, dom, rd.i, rd.eps);
  return rd;
}

one_point_feedback_result one_point_feedback(one_point_state& st, const domain& dom,
                                             const one_point_round& round, double v,
                                             double eta_step, double tol) {
  const int d = dom.dim;
  const int k = round.i - 1;
  one_point_feedback_result out;
  const Eigen::VectorXd gtilde = one_point_optimism(st, dom);
  const double lam = barrier_eigen(st.w[k], dom.lower[k], dom.upper[k]);
  const double innovation =
      static_cast<double>(d) * (v - round.z) * static_cast<double>(round.eps) *
      std::sqrt(lam);
  out.g = gtilde;
  out.g[k] += innovation;
  out.innovation_sq = innovation * innovation;

  if (round.eps > 0) {
    st.r_plus[k] = v;
  } else {
    st.r_minus[k] = v;
  }
  st.gsum += out.g;

  for (int j = 0; j < d; ++j) {
    const double c = 0.5 * (st.r_plus[j] - st.r_minus[j]);
    double eta_j = eta_step;
    while (std::abs(eta_j * c) >= 1.0) {
      eta_j *= 0.5;
      ++st.warnings;
    }
    st.w[j] = solve_coordinate(st.gsum[j], c, eta_j, dom.lower[j], dom.upper[j], tol).root;
  }
  return out;
}

run_record run_one_point(const loss_sequence& seq, const domain& dom, long T,
                         std::uint64_t seed, const one_point_overrides& ov) {
  const int d = dom.dim;
  require_config(dom.kind == domain_kind::box, "one-point learner needs a box domain");
  require_config(seq.dim == d, "runner: adversary and domain dimensions differ");
  require_config(T >= 0, "runner: T must be nonnegative");
  require_config(seq.horizon == T, "runner: adversary horizon must equal T");
  require_config(linear_rounds(seq), "one-point learner needs a linear adversary");

  run_record rec;
  rec.dim = d;
  rec.horizon = T;
  rec.seed = seed;
  rec.columns = {"t", "i", "eps"};
  for (int k = 0; k < d; ++k) rec.columns.push_back("w" + std::to_string(k));
  for (int k = 0; k < d; ++k) rec.columns.push_back("x" + std::to_string(k));
  for (const char* name : {"v", "eta", "innov_sq"}) rec.columns.push_back(name);
  rec.integer_column.assign(rec.columns.size(), false);
  rec.integer_column[0] = rec.integer_column[1] = rec.integer_column[2] = true;
  if (T == 0) {
    rec.rows.resize(0, static_cast<long>(rec.columns.size()));
    return rec;
  }

  double eta_step;
  if (ov.eta) {
    eta_step = *ov.eta;
    require_config(eta_step > 0.0, "runner: eta override must be positive");
  } else {
    const double R = circumradius(dom);
    const double G = seq.G;
    require_config(R > 0.0 && G > 0.0, "runner: default eta needs R > 0 and G > 0");
    const double variation = std::max(ov.vt.value_or(gradient_variation(seq)), 1.0);
    const double dd = static_cast<double>(d);
    eta_step = 1.0 / (8.0 * R * G * dd * dd *
                      std::sqrt(variation * std::log(static_cast<double>(
                                    std::max<long>(T, 2)))));
  }
  const double tol = ov.tol.value_or(1.0 / static_cast<double>(T));
  require_config(tol > 0.0, "runner: solver tolerance must be positive");

  rng gen(seed);
  one_point_state st = make_one_point_state(dom);
  if (ov.record_rows) rec.rows.resize(T, static_cast<long>(rec.columns.size()));

  const auto start = std::chrono::steady_clock::now();
  for (long t = 1; t <= T; ++t) {
    const Eigen::VectorXd w = st.w;
    const one_point_round rd = one_point_play(st, dom, gen);
    const double v = value(seq, t, rd.x);
    const one_point_feedback_result fb = one_point_feedback(st, dom, rd, v, eta_step, tol);

    rec.loss_avg_total += v;
    rec.loss_center_total += value(seq, t, w);
    rec.vbar += fb.innovation_sq;
    if (ov.record_rows) {
      long c = 0;
      rec.rows(t - 1, c++) = static_cast<double>(t);
      rec.rows(t - 1, c++) = static_cast<double>(rd.i);
      rec.rows(t - 1, c++) = static_cast<double>(rd.eps);
      for (int k = 0; k < d; ++k) rec.rows(t - 1, c++) = w[k];
      for (int k = 0; k < d; ++k) rec.rows(t - 1, c++) = rd.x[k];
      rec.rows(t - 1, c++) = v;
      rec.rows(t - 1, c++) = eta_step;
      rec.rows(t - 1, c++) = fb.innovation_sq;
    }
  }
  if (ov.timing) {
    rec.wallclock_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
  }

  rec.warnings = st.warnings;
  const double best = best_fixed(seq, dom, 0.0).total;
  rec.regret_avg = rec.loss_avg_total - best;
  rec.regret_center = rec.loss_center_total - best;
  rec.vt = gradient_variation(seq);
  rec.ft = small_loss_total(seq, dom);
  return rec;
}

}  // namespace banditgv
