#pragma once

#include <cstdint>
#include <optional>

#include "banditgv/adversary.hpp"
#include "banditgv/domain.hpp"
#include "banditgv/record.hpp"

namespace banditgv {

enum class two_point_variant { gv_convex, gv_strongly_convex, variance, small_loss };

struct run_overrides {
  std::optional<double> delta;
  std::optional<double> xi;
  std::optional<double> eta_fixed;
  bool record_rows = true;
  bool timing = false;
};

// Exploration radius 1/(2 d^2 L T R) and shrink factor delta/R; the shrink is
// raised to delta/r when the inradius r < R would let queries escape the box.
struct exploration_geometry {
  double delta = 0.0;
  double xi = 0.0;
};
exploration_geometry default_exploration(const domain& dom, int d, double L, long T,
                                         const run_overrides& ov);

// Coordinate-estimator runner under the chosen step-size regime.
run_record run_two_point(two_point_variant variant, const loss_sequence& seq,
                         const domain& dom, long T, std::uint64_t seed,
                         const run_overrides& ov = {});

// Sphere-sampling two-query baseline for strongly convex losses
// (eta_t = 1/(lambda t), no optimism).
run_record run_sphere_sgd(const loss_sequence& seq, const domain& dom, long T,
                          std::uint64_t seed, const run_overrides& ov = {});

}  // namespace banditgv
