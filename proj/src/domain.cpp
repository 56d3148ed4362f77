#include "banditgv/domain.hpp"

#include <algorithm>
#include <cmath>

namespace banditgv {

domain make_ball(int dim, double radius) {
  require_config(dim >= 1, "domain: dim must be positive");
  require_config(radius > 0.0, "domain: ball radius must be positive");
  domain dom;
  dom.kind = domain_kind::ball;
  dom.dim = dim;
  dom.radius = radius;
  return dom;
}

domain make_box(const Eigen::VectorXd& lower, const Eigen::VectorXd& upper) {
  require_config(lower.size() == upper.size() && lower.size() >= 1,
                 "domain: box bounds must be nonempty and of equal length");
  for (int i = 0; i < lower.size(); ++i) {
    require_config(lower[i] < upper[i], "domain: box needs lower[i] < upper[i]");
  }
  domain dom;
  dom.kind = domain_kind::box;
  dom.dim = static_cast<int>(lower.size());
  dom.lower = lower;
  dom.upper = upper;
  return dom;
}

double circumradius(const domain& dom) {
  if (dom.kind == domain_kind::ball) return dom.radius;
  double sum = 0.0;
  for (int i = 0; i < dom.dim; ++i) {
    sum += std::max(dom.lower[i] * dom.lower[i], dom.upper[i] * dom.upper[i]);
  }
  return std::sqrt(sum);
}

double inradius(const domain& dom) {
  if (dom.kind == domain_kind::ball) return dom.radius;
  double r = std::numeric_limits<double>::infinity();
  for (int i = 0; i < dom.dim; ++i) {
    r = std::min(r, std::min(-dom.lower[i], dom.upper[i]));
  }
  return r;
}

double diameter(const domain& dom) {
  if (dom.kind == domain_kind::ball) return 2.0 * dom.radius;
  return (dom.upper - dom.lower).norm();
}

Eigen::VectorXd project(const domain& dom, double xi, const Eigen::VectorXd& x) {
  require(x.size() == dom.dim, "project: dimension mismatch");
  require(xi >= 0.0 && xi < 1.0, "project: shrink factor must lie in [0,1)");
  const double scale = 1.0 - xi;
  if (dom.kind == domain_kind::ball) {
    const double limit = scale * dom.radius;
    const double norm = x.norm();
    if (norm <= limit) return x;
    return x * (limit / norm);
  }
  Eigen::VectorXd y(dom.dim);
  for (int i = 0; i < dom.dim; ++i) {
    y[i] = std::clamp(x[i], scale * dom.lower[i], scale * dom.upper[i]);
  }
  return y;
}

bool contains(const domain& dom, double xi, const Eigen::VectorXd& x, double tol) {
  require(x.size() == dom.dim, "contains: dimension mismatch");
  const double scale = 1.0 - xi;
  if (dom.kind == domain_kind::ball) return x.norm() <= scale * dom.radius + tol;
  for (int i = 0; i < dom.dim; ++i) {
    if (x[i] < scale * dom.lower[i] - tol) return false;
    if (x[i] > scale * dom.upper[i] + tol) return false;
  }
  return true;
}

}  // namespace banditgv
