#include "banditgv/game.hpp"

#include <algorithm>
#include <cmath>

#include "banditgv/barrier.hpp"
#include "banditgv/rng.hpp"

namespace banditgv {

namespace {

double box_linear_min(const Eigen::VectorXd& c, const domain& box) {
  double total = 0.0;
  for (int k = 0; k < box.dim; ++k) {
    total += std::min(c[k] * box.lower[k], c[k] * box.upper[k]);
  }
  return total;
}

double box_linear_max(const Eigen::VectorXd& c, const domain& box) {
  double total = 0.0;
  for (int k = 0; k < box.dim; ++k) {
    total += std::max(c[k] * box.lower[k], c[k] * box.upper[k]);
  }
  return total;
}

void validate(const game_config& cfg) {
  require_config(cfg.X.kind == domain_kind::box && cfg.Y.kind == domain_kind::box,
                 "game: both strategy sets must be boxes");
  require_config(cfg.A.rows() == cfg.X.dim && cfg.A.cols() == cfg.Y.dim,
                 "game: payoff matrix shape must match the strategy sets");
  require_config(cfg.T >= 0, "game: T must be nonnegative");
  require_config(operator_norm(cfg.A) <= 1.0 + 1e-8,
                 "game: payoff matrix operator norm must be at most 1");
}

std::vector<long> checkpoint_schedule(long T) {
  std::vector<long> cps;
  for (long t = 1; t <= T; t *= 2) cps.push_back(t);
  if (cps.empty() || cps.back() != T) cps.push_back(T);
  return cps;
}

double default_eta(int m, int n, long T) {
  const double lnT = std::log(static_cast<double>(std::max<long>(T, 2)));
  const double m3 = static_cast<double>(m) * m * m;
  const double n3 = static_cast<double>(n) * n * n;
  return 1.0 / (8.0 * std::sqrt(lnT) * (m3 + n3));
}

struct tally {
  Eigen::VectorXd sum_x, sum_y;
  double payoff = 0.0;
};

void record_checkpoint(game_record& rec, const game_config& cfg, const tally& acc,
                       long t) {
  const Eigen::VectorXd xbar = acc.sum_x / static_cast<double>(t);
  const Eigen::VectorXd ybar = acc.sum_y / static_cast<double>(t);
  const double gap = duality_gap(cfg.A, xbar, ybar, cfg.X, cfg.Y);
  const double best_x = box_linear_min(cfg.A * acc.sum_y, cfg.X);
  const double best_y = box_linear_max(cfg.A.transpose() * acc.sum_x, cfg.Y);
  const double reg_x = acc.payoff - best_x;
  const double reg_y = best_y - acc.payoff;
  rec.checkpoints.push_back(t);
  rec.gaps.push_back(gap);
  rec.regret_x.push_back(reg_x);
  rec.regret_y.push_back(reg_y);
  rec.identity_residual.push_back(gap - (reg_x + reg_y) / static_cast<double>(t));
}

void finish(game_record& rec, const tally& acc, long T) {
  if (T > 0) {
    rec.xbar = acc.sum_x / static_cast<double>(T);
    rec.ybar = acc.sum_y / static_cast<double>(T);
  } else {
    rec.xbar = acc.sum_x;
    rec.ybar = acc.sum_y;
  }
  rec.payoff_total = acc.payoff;
}

}  // namespace

double operator_norm(const Eigen::MatrixXd& A, double tol) {
  if (A.size() == 0 || A.norm() == 0.0) return 0.0;
  const long n = A.cols();
  Eigen::VectorXd v(n);
  for (long k = 0; k < n; ++k) v[k] = 1.0 + 1e-3 * static_cast<double>(k);
  v.normalize();
  double sigma = (A * v).norm();
  for (int iter = 0; iter < 10000; ++iter) {
    Eigen::VectorXd next = A.transpose() * (A * v);
    const double norm = next.norm();
    if (norm == 0.0) return 0.0;
    v = next / norm;
    const double sigma_next = (A * v).norm();
    if (std::abs(sigma_next - sigma) <= tol * std::max(1.0, sigma_next)) {
      return sigma_next;
    }
    sigma = sigma_next;
  }
  return sigma;
}

double duality_gap(const Eigen::MatrixXd& A, const Eigen::VectorXd& xbar,
                   const Eigen::VectorXd& ybar, const domain& X, const domain& Y) {
  require(X.kind == domain_kind::box && Y.kind == domain_kind::box,
          "duality_gap: strategy sets must be boxes");
  require(contains(X, 0.0, xbar, 1e-9) && contains(Y, 0.0, ybar, 1e-9),
          "duality_gap: averages must be feasible");
  return box_linear_max(A.transpose() * xbar, Y) - box_linear_min(A * ybar, X);
}

game_record run_game(const game_config& cfg, std::uint64_t seed) {
  validate(cfg);
  const int m = cfg.X.dim, n = cfg.Y.dim;
  game_record rec;
  rec.m = m;
  rec.n = n;
  rec.horizon = cfg.T;
  rec.seed = seed;
  rec.eta_x = cfg.eta_x > 0.0 ? cfg.eta_x : default_eta(m, n, cfg.T);
  rec.eta_y = cfg.eta_y > 0.0 ? cfg.eta_y : default_eta(m, n, cfg.T);
  if (cfg.T == 0) {
    rec.xbar = Eigen::VectorXd::Zero(m);
    rec.ybar = Eigen::VectorXd::Zero(n);
    return rec;
  }
  const double tol = cfg.tol > 0.0 ? cfg.tol : 1.0 / static_cast<double>(cfg.T);
  const std::vector<long> cps = checkpoint_schedule(cfg.T);

  rng gen(seed);
  one_point_state px = make_one_point_state(cfg.X);
  one_point_state py = make_one_point_state(cfg.Y);
  tally acc{Eigen::VectorXd::Zero(m), Eigen::VectorXd::Zero(n), 0.0};

  std::size_t next_cp = 0;
  for (long t = 1; t <= cfg.T; ++t) {
    const one_point_round rx = one_point_play(px, cfg.X, gen);
    const one_point_round ry = one_point_play(py, cfg.Y, gen);
    const double payoff = rx.x.dot(cfg.A * ry.x);
    one_point_feedback(px, cfg.X, rx, payoff, rec.eta_x, tol);
    one_point_feedback(py, cfg.Y, ry, -payoff, rec.eta_y, tol);

    acc.sum_x += rx.x;
    acc.sum_y += ry.x;
    acc.payoff += payoff;
    if (next_cp < cps.size() && t == cps[next_cp]) {
      record_checkpoint(rec, cfg, acc, t);
      ++next_cp;
    }
  }
  rec.warnings = px.warnings + py.warnings;
  finish(rec, acc, cfg.T);
  return rec;
}

game_record run_game_scripted(const game_config& cfg, std::uint64_t seed) {
  validate(cfg);
  const int m = cfg.X.dim, n = cfg.Y.dim;
  game_record rec;
  rec.m = m;
  rec.n = n;
  rec.horizon = cfg.T;
  rec.seed = seed;
  if (cfg.T == 0) {
    rec.xbar = Eigen::VectorXd::Zero(m);
    rec.ybar = Eigen::VectorXd::Zero(n);
    return rec;
  }
  const double tol = cfg.tol > 0.0 ? cfg.tol : 1.0 / static_cast<double>(cfg.T);
  const std::vector<long> cps = checkpoint_schedule(cfg.T);

  // Known opponent script: strict alternation between the extreme vertices.
  const Eigen::VectorXd y_hi = cfg.Y.upper;
  const Eigen::VectorXd y_lo = cfg.Y.lower;
  const double step_var = (cfg.A * (y_hi - y_lo)).squaredNorm();
  const double variation =
      std::max(static_cast<double>(cfg.T - 1) * step_var, 1e-12);
  if (cfg.eta_x > 0.0) {
    rec.eta_x = cfg.eta_x;
  } else {
    const double lnT = std::log(static_cast<double>(std::max<long>(cfg.T, 2)));
    const double rx = diameter(cfg.X), ry = diameter(cfg.Y);
    const double var_branch =
        1.0 / (8.0 * rx * ry * static_cast<double>(m) * m * std::sqrt(variation * lnT));
    rec.eta_x = std::min(var_branch, default_eta(m, n, cfg.T));
  }

  rng gen(seed);
  one_point_state px = make_one_point_state(cfg.X);
  tally acc{Eigen::VectorXd::Zero(m), Eigen::VectorXd::Zero(n), 0.0};

  std::size_t next_cp = 0;
  for (long t = 1; t <= cfg.T; ++t) {
    const one_point_round rx = one_point_play(px, cfg.X, gen);
    const Eigen::VectorXd y = (t % 2 == 1) ? y_hi : y_lo;
    const double payoff = rx.x.dot(cfg.A * y);
    one_point_feedback(px, cfg.X, rx, payoff, rec.eta_x, tol);

    acc.sum_x += rx.x;
    acc.sum_y += y;
    acc.payoff += payoff;
    if (next_cp < cps.size() && t == cps[next_cp]) {
      record_checkpoint(rec, cfg, acc, t);
      ++next_cp;
    }
  }
  rec.warnings = px.warnings;
  finish(rec, acc, cfg.T);
  return rec;
}

}  // namespace banditgv
