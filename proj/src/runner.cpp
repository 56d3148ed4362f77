#include "banditgv/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "banditgv/estimator.hpp"
#include "banditgv/metrics.hpp"
#include "banditgv/oogd.hpp"
#include "banditgv/rng.hpp"
#include "banditgv/schedule.hpp"

namespace banditgv {

namespace {

void coordinate_columns(std::vector<std::string>& cols, const std::string& stem, int d) {
  for (int k = 0; k < d; ++k) cols.push_back(stem + std::to_string(k));
}

step_schedule schedule_for(two_point_variant variant, const loss_sequence& seq,
                           double R, int d, long T, const run_overrides& ov) {
  if (ov.eta_fixed) return make_fixed(*ov.eta_fixed);
  switch (variant) {
    case two_point_variant::gv_convex:
      return make_adaptive_sqrt(R, gv_convex_constant(d, R, seq.L, T));
    case two_point_variant::gv_strongly_convex:
      require_config(seq.lambda > 0.0,
                     "runner: gv_strongly_convex needs an adversary with lambda > 0");
      return make_inverse_linear(seq.lambda);
    case two_point_variant::variance:
    case two_point_variant::small_loss:
      return make_adaptive_sqrt(R, variance_constant(d));
  }
  return make_fixed(1.0);
}

void finish_summary(run_record& rec, const loss_sequence& seq, const domain& dom,
                    double xi) {
  rec.regret_avg = rec.loss_avg_total - best_fixed(seq, dom, 0.0).total;
  rec.regret_center = rec.loss_center_total - best_fixed(seq, dom, xi).total;
  rec.vt = gradient_variation(seq);
  rec.ft = small_loss_total(seq, dom);
}

}  // namespace

exploration_geometry default_exploration(const domain& dom, int d, double L, long T,
                                         const run_overrides& ov) {
  const double R = circumradius(dom);
  const double r = inradius(dom);
  require_config(r > 0.0, "exploration: the origin must be interior to the domain");
  exploration_geometry geo;
  if (ov.delta) {
    geo.delta = *ov.delta;
  } else {
    require_config(L > 0.0, "exploration: the default query radius needs L > 0");
    const double dd = static_cast<double>(d);
    geo.delta = 1.0 / (2.0 * dd * dd * L * static_cast<double>(std::max<long>(T, 1)) * R);
  }
  require_config(geo.delta > 0.0, "exploration: delta must be positive");
  geo.xi = ov.xi ? *ov.xi : geo.delta / r;
  require_config(geo.xi >= 0.0 && geo.xi < 1.0, "exploration: xi must lie in [0, 1)");
  require_config(geo.delta <= geo.xi * r * (1.0 + 1e-12),
                 "exploration: query radius exceeds the shrink slack (delta > xi * inradius)");
  return geo;
}

run_record run_two_point(two_point_variant variant, const loss_sequence& seq,
                         const domain& dom, long T, std::uint64_t seed,
                         const run_overrides& ov) {
  const int d = dom.dim;
  require_config(seq.dim == d, "runner: adversary and domain dimensions differ");
  require_config(T >= 0, "runner: T must be nonnegative");
  require_config(seq.horizon == T, "runner: adversary horizon must equal T");

  run_record rec;
  rec.dim = d;
  rec.horizon = T;
  rec.seed = seed;
  rec.columns = {"t", "i"};
  coordinate_columns(rec.columns, "w", d);
  coordinate_columns(rec.columns, "x_plus", d);
  coordinate_columns(rec.columns, "x_minus", d);
  for (const char* name : {"f_plus", "f_minus", "v", "eta", "innov_sq"}) {
    rec.columns.push_back(name);
  }
  rec.integer_column.assign(rec.columns.size(), false);
  rec.integer_column[0] = rec.integer_column[1] = true;

  const exploration_geometry geo = default_exploration(dom, d, seq.L, T, ov);
  rec.delta = geo.delta;
  rec.xi = geo.xi;
  if (T == 0) {
    rec.rows.resize(0, static_cast<long>(rec.columns.size()));
    return rec;
  }
  const double R = circumradius(dom);
  const step_schedule sched = schedule_for(variant, seq, R, d, T, ov);

  rng gen(seed);
  oogd_state st = make_oogd_state(d);
  two_point_state est = make_two_point_state(d, geo.delta);
  if (ov.record_rows) rec.rows.resize(T, static_cast<long>(rec.columns.size()));

  const auto start = std::chrono::steady_clock::now();
  for (long t = 1; t <= T; ++t) {
    const Eigen::VectorXd w = st.w;
    const int i = sample_coordinate(gen, d);
    const auto [x_plus, x_minus] = query_points(w, i, geo.delta);
    require(contains(dom, 0.0, x_plus, 1e-12) && contains(dom, 0.0, x_minus, 1e-12),
            "runner: query pair left the feasible set");
    const double f_plus = value(seq, t, x_plus);
    const double f_minus = value(seq, t, x_minus);
    const double v = directional_value(f_plus, f_minus, geo.delta);
    require(std::abs(v) <= seq.G + 1e-9,
            "runner: directional value exceeded the declared Lipschitz bound");

    const double vbar_prev = st.vbar;
    const double eta_t = eta(sched, t, vbar_prev);
    const estimate_result er = estimator_update(est, t, i, v);
    const double eta_next = eta(sched, t + 1, vbar_prev + er.innovation_sq);

    rec.loss_avg_total += 0.5 * (f_plus + f_minus);
    rec.loss_center_total += value(seq, t, w);
    if (ov.record_rows) {
      long c = 0;
      rec.rows(t - 1, c++) = static_cast<double>(t);
      rec.rows(t - 1, c++) = static_cast<double>(i);
      for (int k = 0; k < d; ++k) rec.rows(t - 1, c++) = w[k];
      for (int k = 0; k < d; ++k) rec.rows(t - 1, c++) = x_plus[k];
      for (int k = 0; k < d; ++k) rec.rows(t - 1, c++) = x_minus[k];
      rec.rows(t - 1, c++) = f_plus;
      rec.rows(t - 1, c++) = f_minus;
      rec.rows(t - 1, c++) = v;
      rec.rows(t - 1, c++) = eta_t;
      rec.rows(t - 1, c++) = er.innovation_sq;
    }
    oogd_step(st, er.g, est.gtilde, eta_t, eta_next, er.innovation_sq, dom, geo.xi);
  }
  if (ov.timing) {
    rec.wallclock_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
  }

  rec.vbar = st.vbar;
  finish_summary(rec, seq, dom, geo.xi);
  return rec;
}

run_record run_sphere_sgd(const loss_sequence& seq, const domain& dom, long T,
                          std::uint64_t seed, const run_overrides& ov) {
  const int d = dom.dim;
  require_config(seq.dim == d, "runner: adversary and domain dimensions differ");
  require_config(T >= 0, "runner: T must be nonnegative");
  require_config(seq.horizon == T, "runner: adversary horizon must equal T");
  require_config(seq.lambda > 0.0, "runner: sphere baseline needs lambda > 0");

  run_record rec;
  rec.dim = d;
  rec.horizon = T;
  rec.seed = seed;
  rec.columns = {"t"};
  coordinate_columns(rec.columns, "u", d);
  coordinate_columns(rec.columns, "w", d);
  coordinate_columns(rec.columns, "x_plus", d);
  coordinate_columns(rec.columns, "x_minus", d);
  for (const char* name : {"f_plus", "f_minus", "v", "eta", "innov_sq"}) {
    rec.columns.push_back(name);
  }
  rec.integer_column.assign(rec.columns.size(), false);
  rec.integer_column[0] = true;

  const exploration_geometry geo = default_exploration(dom, d, seq.L, T, ov);
  rec.delta = geo.delta;
  rec.xi = geo.xi;
  if (T == 0) {
    rec.rows.resize(0, static_cast<long>(rec.columns.size()));
    return rec;
  }
  const step_schedule sched =
      ov.eta_fixed ? make_fixed(*ov.eta_fixed) : make_inverse_linear(seq.lambda);

  rng gen(seed);
  Eigen::VectorXd w = Eigen::VectorXd::Zero(d);
  if (ov.record_rows) rec.rows.resize(T, static_cast<long>(rec.columns.size()));

  const auto start = std::chrono::steady_clock::now();
  for (long t = 1; t <= T; ++t) {
    const Eigen::VectorXd u = sample_unit_sphere(gen, d);
    const Eigen::VectorXd x_plus = w + geo.delta * u;
    const Eigen::VectorXd x_minus = w - geo.delta * u;
    require(contains(dom, 0.0, x_plus, 1e-12) && contains(dom, 0.0, x_minus, 1e-12),
            "runner: query pair left the feasible set");
    const double f_plus = value(seq, t, x_plus);
    const double f_minus = value(seq, t, x_minus);
    const double v = directional_value(f_plus, f_minus, geo.delta);
    const Eigen::VectorXd g = static_cast<double>(d) * v * u;
    require(g.norm() <= static_cast<double>(d) * seq.G + 1e-9,
            "runner: sphere gradient estimate exceeded d * G");
    const double eta_t = eta(sched, t, 0.0);

    rec.loss_avg_total += 0.5 * (f_plus + f_minus);
    rec.loss_center_total += value(seq, t, w);
    if (ov.record_rows) {
      long c = 0;
      rec.rows(t - 1, c++) = static_cast<double>(t);
      for (int k = 0; k < d; ++k) rec.rows(t - 1, c++) = u[k];
      for (int k = 0; k < d; ++k) rec.rows(t - 1, c++) = w[k];
      for (int k = 0; k < d; ++k) rec.rows(t - 1, c++) = x_plus[k];
      for (int k = 0; k < d; ++k) rec.rows(t - 1, c++) = x_minus[k];
      rec.rows(t - 1, c++) = f_plus;
      rec.rows(t - 1, c++) = f_minus;
      rec.rows(t - 1, c++) = v;
      rec.rows(t - 1, c++) = eta_t;
      rec.rows(t - 1, c++) = g.squaredNorm();
    }
    rec.vbar += g.squaredNorm();
    w = project(dom, geo.xi, w - eta_t * g);
  }
  if (ov.timing) {
    rec.wallclock_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
  }

  finish_summary(rec, seq, dom, geo.xi);
  return rec;
}

}  // namespace banditgv
