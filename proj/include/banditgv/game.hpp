#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "banditgv/domain.hpp"

namespace banditgv {

// Largest singular value by power iteration on A'A (deterministic start).
double operator_norm(const Eigen::MatrixXd& A, double tol = 1e-8);

// max_y <A'xbar, y> - min_x <A ybar, x>, both solved coordinate-wise over the
// boxes; nonnegative for feasible averages.
double duality_gap(const Eigen::MatrixXd& A, const Eigen::VectorXd& xbar,
                   const Eigen::VectorXd& ybar, const domain& X, const domain& Y);

// Bilinear zero-sum game <x, A y> over boxes: x minimizes, y maximizes. Both
// players see only the scalar payoff of the played pair.
struct game_config {
  Eigen::MatrixXd A;  // operator norm <= 1, checked at load
  domain X, Y;
  long T = 0;
  double eta_x = 0.0;  // 0 -> default step size
  double eta_y = 0.0;
  double tol = 0.0;    // coordinate-solver tolerance, 0 -> 1/T
};

struct game_record {
  int m = 0, n = 0;
  long horizon = 0;
  std::uint64_t seed = 0;
  double eta_x = 0.0, eta_y = 0.0;
  std::vector<long> checkpoints;  // powers of two, plus T
  std::vector<double> gaps;       // duality gap of the running averages
  std::vector<double> regret_x;   // cumulative payoff minus best fixed x
  std::vector<double> regret_y;   // best fixed y minus cumulative payoff
  std::vector<double> identity_residual;  // gap - (regret_x + regret_y)/t
  Eigen::VectorXd xbar, ybar;     // final averages of the played points
  double payoff_total = 0.0;
  long warnings = 0;
};

// Both players run the one-point log-barrier learner with the horizon-only
// step size 1/(8 sqrt(ln T) (m^3 + n^3)) unless overridden.
game_record run_game(const game_config& cfg, std::uint64_t seed);

// y follows a scripted alternation between the two extreme vertices of Y
// (payoff variation grows linearly); x learns with the step size
// min{ 1/(8 R_x R_y m^2 sqrt(V ln T)), 1/(8 sqrt(ln T)(m^3+n^3)) } using the
// script's known variation V.
game_record run_game_scripted(const game_config& cfg, std::uint64_t seed);

}  // namespace banditgv
