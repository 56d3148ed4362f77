#pragma once

#include <Eigen/Dense>

#include "banditgv/domain.hpp"

namespace banditgv {

// Optimistic projected-gradient state: what is the descent iterate, w the
// played iterate after the optimistic half-step. Both stay in (1-xi)*X.
struct oogd_state {
  Eigen::VectorXd what;
  Eigen::VectorXd w;
  long t = 0;
  double vbar = 0.0;  // accumulated squared innovation
};

oogd_state make_oogd_state(int d);

// One round: what <- proj(what - eta_t * g); w <- proj(what - eta_next *
// gtilde_next); the innovation increments vbar.
void oogd_step(oogd_state& state, const Eigen::VectorXd& g,
               const Eigen::VectorXd& gtilde_next, double eta_t, double eta_next,
               double innovation_sq, const domain& dom, double xi);

}  // namespace banditgv
