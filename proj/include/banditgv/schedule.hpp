#pragma once

#include <cmath>

#include "banditgv/check.hpp"

namespace banditgv {

enum class schedule_kind { adaptive_sqrt, inverse_linear, fixed };

// Step-size schedules. adaptive_sqrt yields scale * R / sqrt(C + Vbar_{t-1});
// inverse_linear yields scale / (lambda * t); fixed is constant.
struct step_schedule {
  schedule_kind kind = schedule_kind::fixed;
  double radius = 0.0;
  double constant = 0.0;
  double lambda = 0.0;
  double scale = 1.0;
  double eta_fixed = 0.0;
};

inline step_schedule make_adaptive_sqrt(double R, double C, double scale = 1.0) {
  require_config(R > 0.0 && C > 0.0 && scale > 0.0,
                 "schedule: adaptive parameters must be positive");
  step_schedule s;
  s.kind = schedule_kind::adaptive_sqrt;
  s.radius = R;
  s.constant = C;
  s.scale = scale;
  return s;
}

inline step_schedule make_inverse_linear(double lambda, double scale = 1.0) {
  require_config(lambda > 0.0, "schedule: strong convexity modulus must be positive");
  require_config(scale > 0.0, "schedule: scale must be positive");
  step_schedule s;
  s.kind = schedule_kind::inverse_linear;
  s.lambda = lambda;
  s.scale = scale;
  return s;
}

inline step_schedule make_fixed(double eta) {
  require_config(eta > 0.0, "schedule: fixed step size must be positive");
  step_schedule s;
  s.kind = schedule_kind::fixed;
  s.eta_fixed = eta;
  return s;
}

inline double eta(const step_schedule& s, long t, double vbar_prev) {
  require(t >= 1 && vbar_prev >= 0.0, "eta: invalid inputs");
  switch (s.kind) {
    case schedule_kind::adaptive_sqrt:
      return s.scale * s.radius / std::sqrt(s.constant + vbar_prev);
    case schedule_kind::inverse_linear:
      return s.scale / (s.lambda * static_cast<double>(t));
    case schedule_kind::fixed:
      return s.eta_fixed;
  }
  return s.eta_fixed;
}

// Denominator constant for the convex gradient-variation regime.
inline double gv_convex_constant(int d, double R, double L, long T) {
  const double dd = static_cast<double>(d);
  return 1152.0 * dd * dd * dd * R * R * R * R * L * L *
         std::log(static_cast<double>(std::max<long>(T, 2)));
}

// Denominator constant for the variance / small-loss regimes.
inline double variance_constant(int d) {
  return static_cast<double>(d) * static_cast<double>(d);
}

}  // namespace banditgv
