#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "banditgv/adversary.hpp"
#include "banditgv/domain.hpp"
#include "banditgv/record.hpp"
#include "banditgv/runner.hpp"

namespace banditgv {

// Step-size grid for the dynamic-regret ensemble: geometric with ratio 2,
// clamped so the cap R/(16L sqrt(d^3 ln T)) appears exactly once, as the last
// entry. For d = 1 the ln d factor in the first entry is replaced by 1.
std::vector<double> dynamic_pool(double R, double L, int d, long T);

// Modulus grid for the universal ensemble: {2^k / T : k = 0..ceil(log2 T)}.
std::vector<double> sc_pool(long T);

// Optimistic exponential-weights meta learner. The learning rate shrinks with
// the accumulated sup-norm deviation between losses and their predictions.
struct hedge_meta {
  int n = 0;
  double c0 = 0.0;
  double gamma = 0.0;
  Eigen::VectorXd cum;    // per-expert cumulative losses
  double dev_acc = 0.0;   // sum over past rounds of |ell_s - m_s|_inf^2
  double eps = 0.0;       // learning rate used by the latest update
  Eigen::VectorXd p;
};
hedge_meta make_hedge_meta(int n, double c0, double gamma);

// p_{t+1,i} proportional to exp(-eps_t (cum_i + m_next_i)) with
// eps_t = sqrt(ln n / (c0^2 + dev_acc)); dev_acc absorbs |ell - m_t|_inf^2
// afterwards. Exponents are max-shifted before exponentiation.
Eigen::VectorXd hedge_update(hedge_meta& meta, const Eigen::VectorXd& ell,
                             const Eigen::VectorXd& m_t, const Eigen::VectorXd& m_next);

// Second-order multiplicative-weights meta learner with per-expert learning
// rates; potentials are kept in log-space.
struct mlprod_meta {
  int n = 0;
  Eigen::VectorXd log_w;    // log potentials, start at -ln n
  Eigen::VectorXd eps;      // per-expert learning rates, capped at 1/8
  Eigen::VectorXd dev_acc;  // per-expert sum of (r_s - m_s)^2
  Eigen::VectorXd p;
};
mlprod_meta make_mlprod_meta(int n);

// Potential and learning-rate update from the realized regret vector r_t and
// its prediction m_t:
//   W_i <- (W_i * exp(eps_i r_i - eps_i^2 (r_i - m_i)^2))^(eps'_i / eps_i).
void mlprod_absorb(mlprod_meta& meta, const Eigen::VectorXd& r,
                   const Eigen::VectorXd& m);
// p_i proportional to eps_i * exp(eps_i * m_next_i) * W_i (no mutation).
Eigen::VectorXd mlprod_weights(const mlprod_meta& meta, const Eigen::VectorXd& m_next);
// absorb followed by weights; stores the result in meta.p.
Eigen::VectorXd mlprod_update(mlprod_meta& meta, const Eigen::VectorXd& r,
                              const Eigen::VectorXd& m, const Eigen::VectorXd& m_next);

// Optimism vector for the universal meta learner: zero for strongly convex
// experts; (z - <gtilde, w_i>)/scale for the others, where z solves the
// scalar fixed point z = <gtilde, sum_i p_i(z) w_i> by bisection on
// [-bound, bound] (falls back to damped iteration, then to z_prev).
struct fixed_point_result {
  double z = 0.0;
  bool converged = false;
  Eigen::VectorXd m;
};
fixed_point_result universal_optimism_fixed_point(
    const mlprod_meta& meta, const Eigen::MatrixXd& iterates,
    const std::vector<bool>& strongly_convex, const Eigen::VectorXd& gtilde,
    double scale, double bound, double tol, double z_prev);

// Dynamic-regret ensemble: a pool of fixed-step optimistic learners combined
// by hedge_update on movement-corrected linearized losses; one shared
// two-point estimator feeds every base. An eta override collapses the pool to
// that single step size.
run_record run_dynamic(const loss_sequence& seq, const domain& dom, long T,
                       std::uint64_t seed, const run_overrides& ov = {});

// Universal ensemble: strongly convex surrogate experts on the sc_pool grid
// plus one convex and one linear expert, combined by the mlprod meta on
// rescaled linearized losses in [0, 1].
run_record run_universal(const loss_sequence& seq, const domain& dom, long T,
                         std::uint64_t seed, const run_overrides& ov = {});

}  // namespace banditgv
