#pragma once

#include <Eigen/Dense>

#include "banditgv/check.hpp"

namespace banditgv {

enum class domain_kind { ball, box };

// Feasible set: an origin-centered Euclidean ball, or an axis-aligned box.
// Shrinkage by xi scales the whole set about the origin: (1-xi)*X.
struct domain {
  domain_kind kind = domain_kind::ball;
  int dim = 0;
  double radius = 0.0;          // ball only
  Eigen::VectorXd lower, upper; // box only, lower[i] < upper[i]
};

domain make_ball(int dim, double radius);
domain make_box(const Eigen::VectorXd& lower, const Eigen::VectorXd& upper);

// Smallest R with X inside the origin-centered ball of radius R.
double circumradius(const domain& dom);
// Largest r with the origin-centered ball of radius r inside X
// (may be <= 0 when the origin is not interior to a box).
double inradius(const domain& dom);
double diameter(const domain& dom);

// Euclidean projection onto (1-xi)*X.
Eigen::VectorXd project(const domain& dom, double xi, const Eigen::VectorXd& x);
bool contains(const domain& dom, double xi, const Eigen::VectorXd& x, double tol);

}  // namespace banditgv
