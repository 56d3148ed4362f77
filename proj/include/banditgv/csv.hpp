#pragma once

#include <string>
#include <vector>

#include "banditgv/game.hpp"
#include "banditgv/record.hpp"

namespace banditgv {

// 17 significant digits (round-trip exact for doubles).
std::string format_double(double x);

// schema comment line, header row, then one line per round; integer columns
// printed without a decimal point.
void write_rows_csv(const std::string& path, const run_record& rec,
                    const std::string& schema);

// seed,regret_avg,regret_center,VT,VbarT,FT,wallclock_ms,config_hash
void write_summary_csv(const std::string& path, const std::vector<run_record>& recs);

// expert index rows, one column per round.
void write_weights_csv(const std::string& path, const run_record& rec);

// t,gap,regret_x,regret_y,identity_residual at the checkpoints.
void write_gap_csv(const std::string& path, const game_record& rec);

struct sweep_row {
  long T = 0;
  int seeds = 0;
  double mean_center = 0.0, se_center = 0.0;
  double mean_avg = 0.0, se_avg = 0.0;
};
void write_sweep_csv(const std::string& path, const std::vector<sweep_row>& rows);

struct slope_row {
  std::string metric;
  double slope = 0.0, half_width = 0.0, intercept = 0.0;
  int points = 0;
};
void write_slope_csv(const std::string& path, const std::vector<slope_row>& rows);

}  // namespace banditgv
