#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "banditgv/config.hpp"

namespace banditgv {

struct experiment_output {
  std::vector<std::string> files;  // paths written, in a deterministic order
};

// One algorithm at one horizon over a seed list: rows CSV per seed (plus a
// weights CSV for ensembles) and a summary CSV. Seeds fan out to a worker
// pool sized by BANDITGV_THREADS.
experiment_output run_experiment(const config_map& cfg, const std::string& outdir);

// The same algorithm across T_list: per-T aggregates and log-log slopes.
experiment_output sweep_experiment(const config_map& cfg, const std::string& outdir);

// Bilinear game runs: one gap-trajectory CSV per seed.
experiment_output game_experiment(const config_map& cfg, const std::string& outdir);

// Coordinate-draw statistics over independent streams.
experiment_output diagnose_experiment(int d, long rounds, int trials,
                                      std::uint64_t seed0, const std::string& outdir);

}  // namespace banditgv
