#include "banditgv/ensemble.hpp"

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

double ln_horizon(long T) { return std::log(static_cast<double>(std::max<long>(T, 2))); }

std::vector<std::string> ensemble_columns(int d) {
  std::vector<std::string> cols{"t", "i"};
  for (int k = 0; k < d; ++k) cols.push_back("w" + std::to_string(k));
  for (int k = 0; k < d; ++k) cols.push_back("x_plus" + std::to_string(k));
  for (int k = 0; k < d; ++k) cols.push_back("x_minus" + std::to_string(k));
  for (const char* name : {"f_plus", "f_minus", "v", "eta", "innov_sq"}) {
    cols.push_back(name);
  }
  return cols;
}

void init_ensemble_record(run_record& rec, int d, long T, std::uint64_t seed) {
  rec.dim = d;
  rec.horizon = T;
  rec.seed = seed;
  rec.columns = ensemble_columns(d);
  rec.integer_column.assign(rec.columns.size(), false);
  rec.integer_column[0] = rec.integer_column[1] = true;
}

void write_ensemble_row(run_record& rec, long t, int i, const Eigen::VectorXd& w,
                        const Eigen::VectorXd& x_plus, const Eigen::VectorXd& x_minus,
                        double f_plus, double f_minus, double v, double eta_col,
                        double innov_sq) {
  long c = 0;
  const int d = rec.dim;
  rec.rows(t - 1, c++) = static_cast<double>(t);
  rec.rows(t - 1, c++) = static_cast<double>(i);
  for (int k = 0; k < d; ++k) rec.rows(t - 1, c++) = w[k];
  for (int k = 0; k < d; ++k) rec.rows(t - 1, c++) = x_plus[k];
  for (int k = 0; k < d; ++k) rec.rows(t - 1, c++) = x_minus[k];
  rec.rows(t - 1, c++) = f_plus;
  rec.rows(t - 1, c++) = f_minus;
  rec.rows(t - 1, c++) = v;
  rec.rows(t - 1, c++) = eta_col;
  rec.rows(t - 1, c++) = innov_sq;
}

void finish_ensemble_summary(run_record& rec, const loss_sequence& seq,
                             const domain& dom, double xi) {
  rec.regret_avg = rec.loss_avg_total - best_fixed(seq, dom, 0.0).total;
  rec.regret_center = rec.loss_center_total - best_fixed(seq, dom, xi).total;
  rec.vt = gradient_variation(seq);
  rec.ft = small_loss_total(seq, dom);
}

}  // namespace

std::vector<double> dynamic_pool(double R, double L, int d, long T) {
  require_config(R > 0.0 && L > 0.0 && d >= 1 && T >= 2,
                 "dynamic_pool: need R > 0, L > 0, d >= 1, T >= 2");
  const double dd = static_cast<double>(d);
  const double lnT = ln_horizon(T);
  const double lnd = d == 1 ? 1.0 : std::log(dd);
  const double cap = R / (16.0 * L * std::sqrt(dd * dd * dd * lnT));
  const double base = std::sqrt(R * R / (dd * dd * dd * static_cast<double>(T) * lnd));
  std::vector<double> pool;
  for (double v = base; v < cap; v *= 2.0) pool.push_back(v);
  pool.push_back(cap);
  return pool;
}

std::vector<double> sc_pool(long T) {
  require_config(T >= 2, "sc_pool: need T >= 2");
  std::vector<double> pool;
  double num = 1.0;
  // k runs to the first power of two at or above T, so the last entry is >= 1.
  while (true) {
    pool.push_back(num / static_cast<double>(T));
    if (num >= static_cast<double>(T)) break;
    num *= 2.0;
  }
  return pool;
}

hedge_meta make_hedge_meta(int n, double c0, double gamma) {
  require_config(n >= 2, "hedge: need at least two experts");
  require_config(c0 > 0.0 && gamma >= 0.0, "hedge: need c0 > 0 and gamma >= 0");
  hedge_meta meta;
  meta.n = n;
  meta.c0 = c0;
  meta.gamma = gamma;
  meta.cum = Eigen::VectorXd::Zero(n);
  meta.p = Eigen::VectorXd::Constant(n, 1.0 / n);
  return meta;
}

Eigen::VectorXd hedge_update(hedge_meta& meta, const Eigen::VectorXd& ell,
                             const Eigen::VectorXd& m_t, const Eigen::VectorXd& m_next) {
  require(ell.size() == meta.n && m_t.size() == meta.n && m_next.size() == meta.n,
          "hedge_update: size mismatch");
  meta.eps = std::sqrt(std::log(static_cast<double>(meta.n)) /
                       (meta.c0 * meta.c0 + meta.dev_acc));
  meta.cum += ell;
  Eigen::VectorXd exponent = -meta.eps * (meta.cum + m_next);
  exponent.array() -= exponent.maxCoeff();
  Eigen::VectorXd w = exponent.array().exp();
  meta.p = w / w.sum();
  meta.dev_acc += (ell - m_t).cwiseAbs().maxCoeff() *
                  (ell - m_t).cwiseAbs().maxCoeff();
  return meta.p;
}

mlprod_meta make_mlprod_meta(int n) {
  require_config(n >= 2, "mlprod: need at least two experts");
  mlprod_meta meta;
  meta.n = n;
  meta.log_w = Eigen::VectorXd::Constant(n, -std::log(static_cast<double>(n)));
  meta.eps = Eigen::VectorXd::Constant(n, 0.125);
  meta.dev_acc = Eigen::VectorXd::Zero(n);
  meta.p = Eigen::VectorXd::Constant(n, 1.0 / n);
  return meta;
}

void mlprod_absorb(mlprod_meta& meta, const Eigen::VectorXd& r,
                   const Eigen::VectorXd& m) {
  require(r.size() == meta.n && m.size() == meta.n, "mlprod_absorb: size mismatch");
  const double lnN = std::log(static_cast<double>(meta.n));
  for (int i = 0; i < meta.n; ++i) {
    const double dev = r[i] - m[i];
    meta.dev_acc[i] += dev * dev;
    const double eps_old = meta.eps[i];
    const double eps_new =
        meta.dev_acc[i] > 0.0 ? std::min(0.125, std::sqrt(lnN / meta.dev_acc[i])) : 0.125;
    meta.log_w[i] = (meta.log_w[i] + eps_old * r[i] - eps_old * eps_old * dev * dev) *
                    (eps_new / eps_old);
    meta.eps[i] = eps_new;
  }
}

Eigen::VectorXd mlprod_weights(const mlprod_meta& meta, const Eigen::VectorXd& m_next) {
  require(m_next.size() == meta.n, "mlprod_weights: size mismatch");
  Eigen::VectorXd exponent(meta.n);
  for (int i = 0; i < meta.n; ++i) {
    exponent[i] = std::log(meta.eps[i]) + meta.eps[i] * m_next[i] + meta.log_w[i];
  }
  exponent.array() -= exponent.maxCoeff();
  Eigen::VectorXd w = exponent.array().exp();
  return w / w.sum();
}

Eigen::VectorXd mlprod_update(mlprod_meta& meta, const Eigen::VectorXd& r,
                              const Eigen::VectorXd& m, const Eigen::VectorXd& m_next) {
  mlprod_absorb(meta, r, m);
  meta.p = mlprod_weights(meta, m_next);
  return meta.p;
}

fixed_point_result universal_optimism_fixed_point(
    const mlprod_meta& meta, const Eigen::MatrixXd& iterates,
    const std::vector<bool>& strongly_convex, const Eigen::VectorXd& gtilde,
    double scale, double bound, double tol, double z_prev) {
  const int n = meta.n;
  require(iterates.cols() == n && static_cast<int>(strongly_convex.size()) == n,
          "fixed point: sizes disagree with the meta state");
  require(scale > 0.0 && bound > 0.0 && tol > 0.0, "fixed point: invalid parameters");

  const Eigen::VectorXd projections = iterates.transpose() * gtilde;  // <gtilde, w_i>
  auto optimism_of = [&](double z) {
    Eigen::VectorXd m(n);
    for (int i = 0; i < n; ++i) {
      m[i] = strongly_convex[i] ? 0.0 : (z - projections[i]) / scale;
    }
    return m;
  };
  auto value_of = [&](double z) {
    const Eigen::VectorXd p = mlprod_weights(meta, optimism_of(z));
    return projections.dot(p);
  };

  fixed_point_result out;
  double lo = -bound, hi = bound;
  const double res_lo = lo - value_of(lo);
  const double res_hi = hi - value_of(hi);
  if (res_lo <= 0.0 && res_hi >= 0.0) {
    double mid = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
      mid = 0.5 * (lo + hi);
      const double res = mid - value_of(mid);
      if (std::abs(res) <= tol || (hi - lo) <= tol) break;
      if (res > 0.0) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out.z = mid;
    out.converged = true;
  } else {
    double z = z_prev;  // damped fallback when the bracket fails numerically
    for (int iter = 0; iter < 50 && !out.converged; ++iter) {
      const double next = 0.5 * (z + value_of(z));
      if (std::abs(next - z) <= tol) out.converged = true;
      z = next;
    }
    out.z = out.converged ? z : z_prev;
  }
  out.m = optimism_of(out.z);
  return out;
}

run_record run_dynamic(const loss_sequence& seq, const domain& dom, long T,
                       std::uint64_t seed, const run_overrides& ov) {
  const int d = dom.dim;
  require_config(seq.dim == d, "runner: adversary and domain dimensions differ");
  require_config(T >= 0, "runner: T must be nonnegative");
  require_config(seq.horizon == T, "runner: adversary horizon must equal T");

  run_record rec;
  init_ensemble_record(rec, d, T, seed);
  const exploration_geometry geo = default_exploration(dom, d, seq.L, T, ov);
  rec.delta = geo.delta;
  rec.xi = geo.xi;
  if (T == 0) {
    rec.rows.resize(0, static_cast<long>(rec.columns.size()));
    return rec;
  }

  const double R = circumradius(dom);
  std::vector<double> pool;
  if (ov.eta_fixed) {
    require_config(*ov.eta_fixed > 0.0, "runner: eta override must be positive");
    pool = {*ov.eta_fixed};
  } else {
    pool = dynamic_pool(R, seq.L, d, T);
  }
  const int N = static_cast<int>(pool.size());
  const double lnT = ln_horizon(T);
  const double d3ln = static_cast<double>(d) * d * d * lnT;
  const double gamma = 4.0 * R * seq.L * std::sqrt(d3ln);
  hedge_meta meta;
  if (N >= 2) {
    const double c0 = 16.0 * R * R * R * std::sqrt(d3ln * std::log(static_cast<double>(N)));
    meta = make_hedge_meta(N, c0, gamma);
  }

  rng gen(seed);
  two_point_state est = make_two_point_state(d, geo.delta);
  std::vector<oogd_state> bases(N, make_oogd_state(d));
  Eigen::VectorXd p = Eigen::VectorXd::Constant(N, 1.0 / N);
  Eigen::MatrixXd prev_iterates = Eigen::MatrixXd::Zero(d, N);
  if (ov.record_rows) rec.rows.resize(T, static_cast<long>(rec.columns.size()));
  rec.weights.resize(N, T);

  const auto start = std::chrono::steady_clock::now();
  for (long t = 1; t <= T; ++t) {
    Eigen::MatrixXd iterates(d, N);
    for (int i = 0; i < N; ++i) iterates.col(i) = bases[i].w;
    const Eigen::VectorXd w = N == 1 ? bases[0].w : Eigen::VectorXd(iterates * p);
    rec.weights.col(t - 1) = p;

    const Eigen::VectorXd gtilde_t = est.gtilde;
    const int i_t = sample_coordinate(gen, d);
    const auto [x_plus, x_minus] = query_points(w, i_t, geo.delta);
    require(contains(dom, 0.0, x_plus, 1e-12) && contains(dom, 0.0, x_minus, 1e-12),
            "runner: query pair left the feasible set");
    const double f_plus = value(seq, t, x_plus);
    const double f_minus = value(seq, t, x_minus);
    const double v = directional_value(f_plus, f_minus, geo.delta);
    require(std::abs(v) <= seq.G + 1e-9,
            "runner: directional value exceeded the declared Lipschitz bound");
    const estimate_result er = estimator_update(est, t, i_t, v);
    const Eigen::VectorXd& gtilde_next = est.gtilde;

    Eigen::VectorXd ell(N), m_t(N);
    for (int i = 0; i < N; ++i) {
      const double move = (iterates.col(i) - prev_iterates.col(i)).squaredNorm();
      ell[i] = er.g.dot(iterates.col(i)) + gamma * move;
      m_t[i] = gtilde_t.dot(iterates.col(i)) + gamma * move;
    }
    for (int i = 0; i < N; ++i) {
      oogd_step(bases[i], er.g, gtilde_next, pool[i], pool[i], er.innovation_sq, dom,
                geo.xi);
    }
    double eta_col = pool[0];
    if (N >= 2) {
      Eigen::VectorXd m_next(N);
      for (int i = 0; i < N; ++i) {
        m_next[i] = gtilde_next.dot(bases[i].w) +
                    gamma * (bases[i].w - iterates.col(i)).squaredNorm();
      }
      p = hedge_update(meta, ell, m_t, m_next);
      eta_col = meta.eps;
    }
    prev_iterates = iterates;

    rec.loss_avg_total += 0.5 * (f_plus + f_minus);
    rec.loss_center_total += value(seq, t, w);
    rec.vbar += er.innovation_sq;
    if (ov.record_rows) {
      write_ensemble_row(rec, t, i_t, w, x_plus, x_minus, f_plus, f_minus, v, eta_col,
                         er.innovation_sq);
    }
  }
  if (ov.timing) {
    rec.wallclock_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
  }
  finish_ensemble_summary(rec, seq, dom, geo.xi);
  return rec;
}

run_record run_universal(const loss_sequence& seq, const domain& dom, long T,
                         std::uint64_t seed, const run_overrides& ov) {
  const int d = dom.dim;
  require_config(seq.dim == d, "runner: adversary and domain dimensions differ");
  require_config(T >= 0, "runner: T must be nonnegative");
  require_config(seq.horizon == T, "runner: adversary horizon must equal T");
  require_config(!ov.eta_fixed, "runner: the universal ensemble has no single step size");

  run_record rec;
  init_ensemble_record(rec, d, T, seed);
  const exploration_geometry geo = default_exploration(dom, d, seq.L, T, ov);
  rec.delta = geo.delta;
  rec.xi = geo.xi;
  if (T == 0) {
    rec.rows.resize(0, static_cast<long>(rec.columns.size()));
    return rec;
  }

  const double R = circumradius(dom);
  const double G = seq.G;
  require_config(G > 0.0 && R > 0.0, "runner: universal ensemble needs G > 0 and R > 0");
  const std::vector<double> lambdas = sc_pool(T);
  const int n_sc = static_cast<int>(lambdas.size());
  const int N = n_sc + 2;  // strongly convex grid, then convex, then linear
  const double scale = 2.0 * std::sqrt(10.0) * d * G * R;
  const double bound = std::sqrt(static_cast<double>(d)) * G * R;
  const double fp_tol = 1.0 / static_cast<double>(T);
  std::vector<bool> sc_mask(N, false);
  for (int i = 0; i < n_sc; ++i) sc_mask[i] = true;

  rng gen(seed);
  two_point_state est = make_two_point_state(d, geo.delta);
  std::vector<oogd_state> bases(N, make_oogd_state(d));
  mlprod_meta meta = make_mlprod_meta(N);
  Eigen::VectorXd p = meta.p;
  Eigen::VectorXd m_cur = Eigen::VectorXd::Zero(N);
  double z_prev = 0.0;
  double vbar_run = 0.0;
  if (ov.record_rows) rec.rows.resize(T, static_cast<long>(rec.columns.size()));
  rec.weights.resize(N, T);

  const auto start = std::chrono::steady_clock::now();
  for (long t = 1; t <= T; ++t) {
    Eigen::MatrixXd iterates(d, N);
    for (int i = 0; i < N; ++i) iterates.col(i) = bases[i].w;
    const Eigen::VectorXd w = iterates * p;
    rec.weights.col(t - 1) = p;

    const int i_t = sample_coordinate(gen, d);
    const auto [x_plus, x_minus] = query_points(w, i_t, geo.delta);
    require(contains(dom, 0.0, x_plus, 1e-12) && contains(dom, 0.0, x_minus, 1e-12),
            "runner: query pair left the feasible set");
    const double f_plus = value(seq, t, x_plus);
    const double f_minus = value(seq, t, x_minus);
    const double v = directional_value(f_plus, f_minus, geo.delta);
    require(std::abs(v) <= seq.G + 1e-9,
            "runner: directional value exceeded the declared Lipschitz bound");
    const double eta_cvx_t = 2.0 * R / std::sqrt(variance_constant(d) + vbar_run);
    const estimate_result er = estimator_update(est, t, i_t, v);
    const Eigen::VectorXd& gtilde_next = est.gtilde;
    const double vbar_next = vbar_run + er.innovation_sq;
    const double eta_cvx_next = 2.0 * R / std::sqrt(variance_constant(d) + vbar_next);

    Eigen::VectorXd ell(N);
    for (int i = 0; i < N; ++i) {
      const double raw = er.g.dot(iterates.col(i)) / scale + 0.5;
      const double excess = std::max(0.0, std::max(raw - 1.0, -raw));
      rec.preclip_excess = std::max(rec.preclip_excess, excess);
      ell[i] = std::clamp(raw, 0.0, 1.0);
    }
    const double mean_loss = p.dot(ell);
    const Eigen::VectorXd r = Eigen::VectorXd::Constant(N, mean_loss) - ell;
    mlprod_absorb(meta, r, m_cur);

    for (int i = 0; i < N; ++i) {
      if (sc_mask[i]) {
        const double lam = lambdas[i];
        const Eigen::VectorXd corr = 0.5 * lam * (iterates.col(i) - w);
        oogd_step(bases[i], er.g + corr, gtilde_next + corr,
                  2.0 / (lam * static_cast<double>(t)),
                  2.0 / (lam * static_cast<double>(t + 1)), er.innovation_sq, dom,
                  geo.xi);
      } else {
        oogd_step(bases[i], er.g, gtilde_next, eta_cvx_t, eta_cvx_next,
                  er.innovation_sq, dom, geo.xi);
      }
    }
    Eigen::MatrixXd next_iterates(d, N);
    for (int i = 0; i < N; ++i) next_iterates.col(i) = bases[i].w;
    const fixed_point_result fp = universal_optimism_fixed_point(
        meta, next_iterates, sc_mask, gtilde_next, scale, bound, fp_tol, z_prev);
    if (!fp.converged) ++rec.warnings;
    z_prev = fp.z;
    m_cur = fp.m;
    p = mlprod_weights(meta, m_cur);
    meta.p = p;
    vbar_run = vbar_next;

    rec.loss_avg_total += 0.5 * (f_plus + f_minus);
    rec.loss_center_total += value(seq, t, w);
    rec.vbar += er.innovation_sq;
    if (ov.record_rows) {
      write_ensemble_row(rec, t, i_t, w, x_plus, x_minus, f_plus, f_minus, v, eta_cvx_t,
                         er.innovation_sq);
    }
  }
  if (ov.timing) {
    rec.wallclock_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
  }
  finish_ensemble_summary(rec, seq, dom, geo.xi);
  return rec;
}

}  // namespace banditgv
