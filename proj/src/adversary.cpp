#include "banditgv/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace banditgv {

namespace {

void check_round(const loss_sequence& seq, long t) {
  require(t >= 1 && t <= seq.horizon, "loss_sequence: round index out of range");
}

// Index into segments for round t (piecewise only).
std::size_t segment_index(const loss_sequence& seq, long t) {
  std::size_t k = 0;
  while (k + 1 < seq.segment_start.size() && seq.segment_start[k + 1] <= t) ++k;
  return k;
}

double max_eigenvalue(const Eigen::MatrixXd& A) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  return es.eigenvalues().maxCoeff();
}

double min_eigenvalue(const Eigen::MatrixXd& A) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  return es.eigenvalues().minCoeff();
}

// Minimum of <ell, x> over (1-xi)*X, attained coordinatewise on boxes and
// radially on balls.
best_fixed_result linear_minimum(const Eigen::VectorXd& ell, const domain& dom, double xi) {
  best_fixed_result out;
  const double scale = 1.0 - xi;
  out.x = Eigen::VectorXd::Zero(dom.dim);
  if (dom.kind == domain_kind::ball) {
    const double norm = ell.norm();
    if (norm > 0.0) out.x = -(scale * dom.radius / norm) * ell;
  } else {
    for (int i = 0; i < dom.dim; ++i) {
      if (ell[i] > 0.0) {
        out.x[i] = scale * dom.lower[i];
      } else if (ell[i] < 0.0) {
        out.x[i] = scale * dom.upper[i];
      }
    }
  }
  out.total = ell.dot(out.x);
  return out;
}

// Projected gradient minimization of a convex quadratic x'Qx/2 + <s, x> over
// a projector-defined convex set; used where no closed form exists.
Eigen::VectorXd pgd_minimize(const Eigen::MatrixXd& Q, const Eigen::VectorXd& s,
                             const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& proj,
                             double tol, long max_iter = 200000) {
  const double lip = std::max(max_eigenvalue(Q), 1e-12);
  const double step = 1.0 / lip;
  Eigen::VectorXd x = proj(Eigen::VectorXd::Zero(s.size()));
  for (long it = 0; it < max_iter; ++it) {
    const Eigen::VectorXd g = Q * x + s;
    const Eigen::VectorXd next = proj(x - step * g);
    const double moved = (next - x).norm();
    x = next;
    if (moved <= tol * step) break;
  }
  return x;
}

}  // namespace

loss_sequence make_stationary_linear(const Eigen::VectorXd& ell, long T, double L) {
  require_config(T >= 0, "adversary: horizon must be nonnegative");
  require_config(L > 0.0, "adversary: smoothness constant must be positive");
  loss_sequence seq;
  seq.family = loss_family::stationary_linear;
  seq.dim = static_cast<int>(ell.size());
  seq.horizon = T;
  seq.ell = ell;
  seq.G = ell.norm();
  seq.L = L;
  return seq;
}

loss_sequence make_linear_drift(const Eigen::MatrixXd& ells, double L) {
  require_config(L > 0.0, "adversary: smoothness constant must be positive");
  require_config(ells.cols() >= 1, "adversary: drift needs at least one round");
  loss_sequence seq;
  seq.family = loss_family::linear_drift;
  seq.dim = static_cast<int>(ells.rows());
  seq.horizon = ells.cols();
  seq.ells = ells;
  seq.G = ells.colwise().norm().maxCoeff();
  seq.L = L;
  return seq;
}

loss_sequence make_alternating_linear(const Eigen::VectorXd& u, long T, double L) {
  Eigen::MatrixXd ells(u.size(), T);
  for (long t = 0; t < T; ++t) ells.col(t) = (t % 2 == 0) ? u : Eigen::VectorXd(-u);
  return make_linear_drift(ells, L);
}

loss_sequence make_quadratic_drift(const Eigen::MatrixXd& A, const Eigen::MatrixXd& bs,
                                   double G) {
  require_config(A.rows() == A.cols() && A.rows() == bs.rows(),
                 "adversary: quadratic shape mismatch");
  require_config((A - A.transpose()).cwiseAbs().maxCoeff() < 1e-12,
                 "adversary: quadratic matrix must be symmetric");
  require_config(min_eigenvalue(A) >= -1e-12, "adversary: quadratic matrix must be PSD");
  require_config(G > 0.0, "adversary: Lipschitz constant must be positive");
  loss_sequence seq;
  seq.family = loss_family::quadratic_drift;
  seq.dim = static_cast<int>(A.rows());
  seq.horizon = bs.cols();
  seq.A = A;
  seq.bs = bs;
  seq.G = G;
  seq.L = std::max(max_eigenvalue(A), 1e-12);
  seq.lambda = std::max(min_eigenvalue(A), 0.0);
  return seq;
}

loss_sequence make_strong_quadratic(double lambda, const Eigen::MatrixXd& centers, double G) {
  require_config(lambda > 0.0, "adversary: strong convexity modulus must be positive");
  require_config(G > 0.0, "adversary: Lipschitz constant must be positive");
  loss_sequence seq;
  seq.family = loss_family::strong_quadratic;
  seq.dim = static_cast<int>(centers.rows());
  seq.horizon = centers.cols();
  seq.centers = centers;
  seq.lambda = lambda;
  seq.G = G;
  seq.L = lambda;
  return seq;
}

loss_sequence make_alternating_centers(double lambda, const Eigen::VectorXd& c0,
                                       const Eigen::VectorXd& c1, long T, double G) {
  require_config(c0.size() == c1.size(), "adversary: center dimension mismatch");
  Eigen::MatrixXd centers(c0.size(), T);
  for (long t = 0; t < T; ++t) centers.col(t) = (t % 2 == 0) ? c0 : c1;
  return make_strong_quadratic(lambda, centers, G);
}

loss_sequence make_piecewise(const std::vector<loss_sequence>& pieces,
                             const std::vector<long>& lengths) {
  require_config(!pieces.empty() && pieces.size() == lengths.size(),
                 "adversary: piecewise needs matching pieces and lengths");
  loss_sequence seq;
  seq.family = loss_family::piecewise_stationary;
  seq.dim = pieces.front().dim;
  seq.G = 0.0;
  seq.L = 0.0;
  seq.lambda = pieces.front().lambda;
  long start = 1;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const loss_sequence& p = pieces[k];
    require_config(p.dim == seq.dim, "adversary: piecewise dimension mismatch");
    require_config(p.family == loss_family::stationary_linear ||
                       (p.family == loss_family::strong_quadratic && p.horizon >= 1),
                   "adversary: piecewise segments must be stationary");
    require_config(lengths[k] >= 1, "adversary: segment length must be positive");
    seq.segment_start.push_back(start);
    seq.segments.push_back(p);
    seq.segments.back().horizon = lengths[k];
    start += lengths[k];
    seq.G = std::max(seq.G, p.G);
    seq.L = std::max(seq.L, p.L);
    seq.lambda = std::min(seq.lambda, p.lambda);
  }
  seq.horizon = start - 1;
  return seq;
}

double value(const loss_sequence& seq, long t, const Eigen::VectorXd& x) {
  check_round(seq, t);
  require(x.size() == seq.dim, "value: dimension mismatch");
  switch (seq.family) {
    case loss_family::stationary_linear:
      return seq.ell.dot(x);
    case loss_family::linear_drift:
      return seq.ells.col(t - 1).dot(x);
    case loss_family::quadratic_drift:
      return 0.5 * x.dot(seq.A * x) + seq.bs.col(t - 1).dot(x);
    case loss_family::strong_quadratic:
      return 0.5 * seq.lambda * (x - seq.centers.col(t - 1)).squaredNorm();
    case loss_family::piecewise_stationary: {
      const std::size_t k = segment_index(seq, t);
      return value(seq.segments[k], 1, x);
    }
  }
  return 0.0;
}

Eigen::VectorXd gradient(const loss_sequence& seq, long t, const Eigen::VectorXd& x) {
  check_round(seq, t);
  require(x.size() == seq.dim, "gradient: dimension mismatch");
  switch (seq.family) {
    case loss_family::stationary_linear:
      return seq.ell;
    case loss_family::linear_drift:
      return seq.ells.col(t - 1);
    case loss_family::quadratic_drift:
      return seq.A * x + seq.bs.col(t - 1);
    case loss_family::strong_quadratic:
      return seq.lambda * (x - seq.centers.col(t - 1));
    case loss_family::piecewise_stationary: {
      const std::size_t k = segment_index(seq, t);
      return gradient(seq.segments[k], 1, x);
    }
  }
  return Eigen::VectorXd::Zero(seq.dim);
}

Eigen::VectorXd loss_vector(const loss_sequence& seq, long t) {
  check_round(seq, t);
  switch (seq.family) {
    case loss_family::stationary_linear:
      return seq.ell;
    case loss_family::linear_drift:
      return seq.ells.col(t - 1);
    case loss_family::piecewise_stationary: {
      const std::size_t k = segment_index(seq, t);
      return loss_vector(seq.segments[k], 1);
    }
    default:
      require(false, "loss_vector: sequence is not linear");
  }
  return Eigen::VectorXd();
}

double gradient_variation(const loss_sequence& seq) {
  switch (seq.family) {
    case loss_family::stationary_linear:
      return 0.0;
    case loss_family::linear_drift: {
      double v = 0.0;
      for (long t = 1; t < seq.horizon; ++t) {
        v += (seq.ells.col(t) - seq.ells.col(t - 1)).squaredNorm();
      }
      return v;
    }
    case loss_family::quadratic_drift: {
      double v = 0.0;
      for (long t = 1; t < seq.horizon; ++t) {
        v += (seq.bs.col(t) - seq.bs.col(t - 1)).squaredNorm();
      }
      return v;
    }
    case loss_family::strong_quadratic: {
      double v = 0.0;
      for (long t = 1; t < seq.horizon; ++t) {
        v += seq.lambda * seq.lambda *
             (seq.centers.col(t) - seq.centers.col(t - 1)).squaredNorm();
      }
      return v;
    }
    case loss_family::piecewise_stationary: {
      // Gradient differences appear only at segment boundaries and must be
      // x-independent: all-linear, or all strongly convex with a shared lambda.
      bool all_linear = true, all_strong = true;
      for (const auto& p : seq.segments) {
        all_linear = all_linear && p.family == loss_family::stationary_linear;
        all_strong = all_strong && p.family == loss_family::strong_quadratic &&
                     p.lambda == seq.segments.front().lambda;
      }
      require(all_linear || all_strong,
              "gradient_variation: piecewise family has no closed form");
      double v = 0.0;
      for (std::size_t k = 1; k < seq.segments.size(); ++k) {
        if (all_linear) {
          v += (seq.segments[k].ell - seq.segments[k - 1].ell).squaredNorm();
        } else {
          const double lam = seq.segments.front().lambda;
          v += lam * lam *
               (seq.segments[k].centers.col(0) - seq.segments[k - 1].centers.col(0))
                   .squaredNorm();
        }
      }
      return v;
    }
  }
  return 0.0;
}

double distance_to(const domain& dom, const Eigen::VectorXd& z) {
  if (dom.kind == domain_kind::ball) return std::max(0.0, z.norm() - dom.radius);
  double sq = 0.0;
  for (int i = 0; i < dom.dim; ++i) {
    const double below = dom.lower[i] - z[i];
    const double above = z[i] - dom.upper[i];
    const double gap = std::max({below, above, 0.0});
    sq += gap * gap;
  }
  return std::sqrt(sq);
}

Eigen::VectorXd project_inflated(const domain& dom, double rho, const Eigen::VectorXd& z) {
  const double dist = distance_to(dom, z);
  if (dist <= rho) return z;
  const Eigen::VectorXd p = project(dom, 0.0, z);
  return p + (rho / dist) * (z - p);
}

namespace {

double per_round_min_inflated(const loss_sequence& seq, long t, const domain& dom,
                              double rho) {
  switch (seq.family) {
    case loss_family::stationary_linear:
    case loss_family::linear_drift: {
      const Eigen::VectorXd ell = loss_vector(seq, t);
      return linear_minimum(ell, dom, 0.0).total - rho * ell.norm();
    }
    case loss_family::strong_quadratic: {
      const double gap = std::max(0.0, distance_to(dom, seq.centers.col(t - 1)) - rho);
      return 0.5 * seq.lambda * gap * gap;
    }
    case loss_family::quadratic_drift: {
      const Eigen::VectorXd b = seq.bs.col(t - 1);
      if (min_eigenvalue(seq.A) > 1e-12) {
        const Eigen::VectorXd xstar = seq.A.ldlt().solve(-b);
        if (distance_to(dom, xstar) <= rho) {
          return 0.5 * xstar.dot(seq.A * xstar) + b.dot(xstar);
        }
      }
      const auto proj = [&](const Eigen::VectorXd& z) {
        return project_inflated(dom, rho, z);
      };
      const Eigen::VectorXd x = pgd_minimize(seq.A, b, proj, 1e-10);
      return 0.5 * x.dot(seq.A * x) + b.dot(x);
    }
    case loss_family::piecewise_stationary: {
      const std::size_t k = segment_index(seq, t);
      return per_round_min_inflated(seq.segments[k], 1, dom, rho);
    }
  }
  return 0.0;
}

}  // namespace

double per_round_min(const loss_sequence& seq, long t, const domain& dom) {
  check_round(seq, t);
  require(seq.L > 0.0, "per_round_min: smoothness constant must be positive");
  return per_round_min_inflated(seq, t, dom, seq.G / seq.L);
}

best_fixed_result best_fixed(const loss_sequence& seq, const domain& dom, double xi) {
  best_fixed_result out;
  out.x = Eigen::VectorXd::Zero(dom.dim);
  if (seq.horizon == 0) return out;
  switch (seq.family) {
    case loss_family::stationary_linear:
    case loss_family::linear_drift: {
      Eigen::VectorXd sum = Eigen::VectorXd::Zero(seq.dim);
      for (long t = 1; t <= seq.horizon; ++t) sum += loss_vector(seq, t);
      out = linear_minimum(sum, dom, xi);
      out.total = sum.dot(out.x);
      return out;
    }
    case loss_family::strong_quadratic: {
      const Eigen::VectorXd mean = seq.centers.rowwise().mean();
      out.x = project(dom, xi, mean);
      break;
    }
    case loss_family::quadratic_drift: {
      // Cumulative loss is T/2 x'Ax + <sum_b, x>; no closed form on general
      // shrunk sets, so fall back to projected gradient descent.
      const Eigen::VectorXd sum_b = seq.bs.rowwise().sum();
      const Eigen::MatrixXd Q = static_cast<double>(seq.horizon) * seq.A;
      if (min_eigenvalue(seq.A) > 1e-12) {
        const Eigen::VectorXd xstar = Q.ldlt().solve(-sum_b);
        if (contains(dom, xi, xstar, 0.0)) {
          out.x = xstar;
          break;
        }
      }
      const auto proj = [&](const Eigen::VectorXd& z) { return project(dom, xi, z); };
      out.x = pgd_minimize(Q, sum_b, proj, 1e-10);
      break;
    }
    case loss_family::piecewise_stationary: {
      bool all_linear = true;
      for (const auto& p : seq.segments) {
        all_linear = all_linear && p.family == loss_family::stationary_linear;
      }
      if (all_linear) {
        Eigen::VectorXd sum = Eigen::VectorXd::Zero(seq.dim);
        for (std::size_t k = 0; k < seq.segments.size(); ++k) {
          sum += static_cast<double>(seq.segments[k].horizon) * seq.segments[k].ell;
        }
        out = linear_minimum(sum, dom, xi);
        out.total = sum.dot(out.x);
        return out;
      }
      // Aggregate objective of mixed stationary pieces is a convex quadratic
      // plus linear part; minimize it by projected gradient descent.
      Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(seq.dim, seq.dim);
      Eigen::VectorXd s = Eigen::VectorXd::Zero(seq.dim);
      for (const auto& p : seq.segments) {
        const double len = static_cast<double>(p.horizon);
        if (p.family == loss_family::stationary_linear) {
          s += len * p.ell;
        } else {
          Q += len * p.lambda * Eigen::MatrixXd::Identity(seq.dim, seq.dim);
          s -= len * p.lambda * p.centers.col(0);
        }
      }
      const auto proj = [&](const Eigen::VectorXd& z) { return project(dom, xi, z); };
      out.x = pgd_minimize(Q, s, proj, 1e-10);
      break;
    }
  }
  out.total = 0.0;
  for (long t = 1; t <= seq.horizon; ++t) out.total += value(seq, t, out.x);
  return out;
}

Eigen::MatrixXd comparators(const loss_sequence& seq, const domain& dom) {
  Eigen::MatrixXd u(seq.dim, seq.horizon);
  if (seq.family == loss_family::piecewise_stationary) {
    for (long t = 1; t <= seq.horizon; ++t) {
      const loss_sequence& p = seq.segments[segment_index(seq, t)];
      if (p.family == loss_family::stationary_linear) {
        u.col(t - 1) = linear_minimum(p.ell, dom, 0.0).x;
      } else {
        u.col(t - 1) = project(dom, 0.0, p.centers.col(0));
      }
    }
    return u;
  }
  const best_fixed_result fixed = best_fixed(seq, dom, 0.0);
  for (long t = 1; t <= seq.horizon; ++t) u.col(t - 1) = fixed.x;
  return u;
}

}  // namespace banditgv
