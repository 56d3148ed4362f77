#pragma once

#include <vector>

#include <Eigen/Dense>

#include "banditgv/check.hpp"
#include "banditgv/domain.hpp"

namespace banditgv {

enum class loss_family {
  stationary_linear,
  linear_drift,
  quadratic_drift,
  strong_quadratic,
  piecewise_stationary,
};

// Synthetic loss sequence. Learners may only call value(); every other
// operation is a metrics-side oracle. Families are restricted to losses whose
// consecutive gradient differences do not depend on x, so the cumulative
// gradient variation has a closed form.
struct loss_sequence {
  loss_family family = loss_family::stationary_linear;
  int dim = 0;
  long horizon = 0;
  double G = 0.0;       // Lipschitz bound on the query region (declared)
  double L = 0.0;       // gradient smoothness (declared, > 0)
  double lambda = 0.0;  // strong convexity modulus (0 when absent)

  Eigen::VectorXd ell;      // stationary_linear: f_t(x) = <ell, x>
  Eigen::MatrixXd ells;     // linear_drift: column t-1 is ell_t
  Eigen::MatrixXd A;        // quadratic_drift: f_t(x) = x'Ax/2 + <b_t, x>
  Eigen::MatrixXd bs;       // quadratic_drift: column t-1 is b_t
  Eigen::MatrixXd centers;  // strong_quadratic: f_t(x) = lambda/2 |x - c_t|^2

  std::vector<long> segment_start;     // piecewise: 1-based first round
  std::vector<loss_sequence> segments; // piecewise: stationary pieces
};

loss_sequence make_stationary_linear(const Eigen::VectorXd& ell, long T, double L);
loss_sequence make_linear_drift(const Eigen::MatrixXd& ells, double L);
// Columns alternate +u, -u, +u, ... for T rounds.
loss_sequence make_alternating_linear(const Eigen::VectorXd& u, long T, double L);
loss_sequence make_quadratic_drift(const Eigen::MatrixXd& A, const Eigen::MatrixXd& bs,
                                   double G);
loss_sequence make_strong_quadratic(double lambda, const Eigen::MatrixXd& centers, double G);
// Centers alternate c0, c1, c0, ... for T rounds.
loss_sequence make_alternating_centers(double lambda, const Eigen::VectorXd& c0,
                                       const Eigen::VectorXd& c1, long T, double G);
loss_sequence make_piecewise(const std::vector<loss_sequence>& pieces,
                             const std::vector<long>& lengths);

double value(const loss_sequence& seq, long t, const Eigen::VectorXd& x);
// Metrics-only oracle.
Eigen::VectorXd gradient(const loss_sequence& seq, long t, const Eigen::VectorXd& x);
// The loss vector of a linear round (errors on non-linear families).
Eigen::VectorXd loss_vector(const loss_sequence& seq, long t);

// Exact sum over t >= 2 of sup_x |grad f_t(x) - grad f_{t-1}(x)|^2.
double gradient_variation(const loss_sequence& seq);

// Minimum of f_t over the inflated set X+ = X (+) (G/L)*unit-ball.
double per_round_min(const loss_sequence& seq, long t, const domain& dom);

struct best_fixed_result {
  Eigen::VectorXd x;
  double total = 0.0;
};
// Minimizer of the cumulative loss over (1-xi)*X.
best_fixed_result best_fixed(const loss_sequence& seq, const domain& dom, double xi);

// Comparator sequence for dynamic regret: per-round segment minimizers over X
// for piecewise sequences, the best fixed point replicated otherwise.
Eigen::MatrixXd comparators(const loss_sequence& seq, const domain& dom);

// Euclidean distance from z to X, and projection onto X (+) rho*unit-ball.
double distance_to(const domain& dom, const Eigen::VectorXd& z);
Eigen::VectorXd project_inflated(const domain& dom, double rho, const Eigen::VectorXd& z);

}  // namespace banditgv
