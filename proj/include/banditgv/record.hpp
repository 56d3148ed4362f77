#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace banditgv {

// Full trace of one run. rows holds one row per round with the schema given
// by columns; the summary fields are recomputable from rows plus the
// adversary oracles (wallclock aside, which is diagnostic only).
struct run_record {
  int dim = 0;
  long horizon = 0;
  std::uint64_t seed = 0;

  std::vector<std::string> columns;
  std::vector<bool> integer_column;
  Eigen::MatrixXd rows;  // horizon x columns.size() when recorded

  double loss_avg_total = 0.0;     // sum of the per-round reported loss
  double loss_center_total = 0.0;  // sum of f_t at the center iterate
  double regret_avg = 0.0;         // vs best fixed point over X
  double regret_center = 0.0;      // vs best fixed point over (1-xi)*X
  double vt = 0.0;                 // adversary gradient variation
  double vbar = 0.0;               // learner cumulative squared innovation
  double ft = 0.0;                 // small-loss quantity
  double delta = 0.0;
  double xi = 0.0;
  double wallclock_ms = 0.0;
  std::uint64_t config_hash = 0;
  long warnings = 0;

  // Ensemble extras: per-expert weights (N x T) and worst pre-clip excursion.
  Eigen::MatrixXd weights;
  double preclip_excess = 0.0;
};

}  // namespace banditgv
