#include "banditgv/oogd.hpp"

namespace banditgv {

oogd_state make_oogd_state(int d) {
  oogd_state state;
  state.what = Eigen::VectorXd::Zero(d);
  state.w = Eigen::VectorXd::Zero(d);
  return state;
}

void oogd_step(oogd_state& state, const Eigen::VectorXd& g,
               const Eigen::VectorXd& gtilde_next, double eta_t, double eta_next,
               double innovation_sq, const domain& dom, double xi) {
  require(eta_t > 0.0 && eta_next > 0.0, "oogd_step: step sizes must be positive");
  require(innovation_sq >= 0.0, "oogd_step: innovation must be nonnegative");
  state.what = project(dom, xi, state.what - eta_t * g);
  state.w = project(dom, xi, state.what - eta_next * gtilde_next);
  state.vbar += innovation_sq;
  state.t += 1;
}

}  // namespace banditgv
