#pragma once

#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "banditgv/adversary.hpp"
#include "banditgv/domain.hpp"
#include "banditgv/record.hpp"
#include "banditgv/rng.hpp"

namespace banditgv {

// Hessian eigenvalue of the log-barrier -log(w-a) - log(b-w) at w.
double barrier_eigen(double w, double a, double b);

// One-point bandit linear optimization over a box: log-barrier FTRL with a
// buffered coordinate estimator. The iterate stays strictly interior.
struct one_point_state {
  Eigen::VectorXd w;        // current iterate (starts at the box center)
  Eigen::VectorXd gsum;     // cumulative gradient estimates
  Eigen::VectorXd r_plus;   // last observed value per (coordinate, +1)
  Eigen::VectorXd r_minus;  // last observed value per (coordinate, -1)
  long warnings = 0;        // step-size halvings forced by |eta c| >= 1
};

one_point_state make_one_point_state(const domain& dom);

// gtilde = (1/2) sum_i lambda_i^(1/2) (r+_i - r-_i) e_i at the current iterate.
Eigen::VectorXd one_point_optimism(const one_point_state& st, const domain& dom);

// x = w + eps * lambda_i^(-1/2) e_i (i 1-based); strictly interior.
Eigen::VectorXd play_action(const one_point_state& st, const domain& dom, int i, int eps);

struct solve_result {
  double root = 0.0;
  int iterations = 0;
};

// Unique root on (a, b) of F(x) = eta*(S + c*sqrt(f''(x))) + f'(x), where f is
// the coordinate barrier; requires |eta*c| < 1 so F is strictly increasing.
// Bisection stops at |F| <= tol or interval width <= tol (max 200 iterations).
solve_result solve_coordinate(double S, double c, double eta, double a, double b,
                              double tol);

// One bandit round, split so a game driver can interleave two learners.
struct one_point_round {
  int i = 0;    // 1-based coordinate
  int eps = 0;  // +1 or -1
  double z = 0.0;
  Eigen::VectorXd x;
};
one_point_round one_point_play(const one_point_state& st, const domain& dom, rng& gen);

struct one_point_feedback_result {
  Eigen::VectorXd g;
  double innovation_sq = 0.0;
};
// Forms g from the observed value, overwrites the buffer, accumulates gsum,
// and solves the d coordinate equations for the next iterate. A coordinate
// with |eta c_i| >= 1 has its step size halved until valid (warning counted).
one_point_feedback_result one_point_feedback(one_point_state& st, const domain& dom,
                                             const one_point_round& round, double v,
                                             double eta_step, double tol);

struct one_point_overrides {
  std::optional<double> eta;
  std::optional<double> vt;   // variation guess for the default step size
  std::optional<double> tol;  // solver tolerance (default 1/T)
  bool record_rows = true;
  bool timing = false;
};

// Full run on a linear adversary; default eta = 1/(8RGd^2 sqrt(V ln T)) with
// V = max(oracle variation, 1).
run_record run_one_point(const loss_sequence& seq, const domain& dom, long T,
                         std::uint64_t seed, const one_point_overrides& ov = {});

}  // namespace banditgv
