#include "banditgv/csv.hpp"

#include <cstdio>
#include <fstream>

#include "banditgv/check.hpp"

namespace banditgv {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: byte-stable newlines
  require(out.good(), "csv: cannot open '" + path + "' for writing");
  return out;
}

std::string format_integer(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(x));
  return buf;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_rows_csv(const std::string& path, const run_record& rec,
                    const std::string& schema) {
  std::ofstream out = open_out(path);
  out << "# schema=" << schema << "_v1\n";
  for (std::size_t c = 0; c < rec.columns.size(); ++c) {
    out << (c ? "," : "") << rec.columns[c];
  }
  out << "\n";
  for (long r = 0; r < rec.rows.rows(); ++r) {
    for (long c = 0; c < rec.rows.cols(); ++c) {
      if (c) out << ",";
      out << (rec.integer_column[static_cast<std::size_t>(c)]
                  ? format_integer(rec.rows(r, c))
                  : format_double(rec.rows(r, c)));
    }
    out << "\n";
  }
}

void write_summary_csv(const std::string& path, const std::vector<run_record>& recs) {
  std::ofstream out = open_out(path);
  out << "# schema=summary_v1\n";
  out << "seed,regret_avg,regret_center,VT,VbarT,FT,wallclock_ms,config_hash\n";
  for (const run_record& rec : recs) {
    out << rec.seed << "," << format_double(rec.regret_avg) << ","
        << format_double(rec.regret_center) << "," << format_double(rec.vt) << ","
        << format_double(rec.vbar) << "," << format_double(rec.ft) << ","
        << format_double(rec.wallclock_ms) << "," << rec.config_hash << "\n";
  }
}

void write_weights_csv(const std::string& path, const run_record& rec) {
  std::ofstream out = open_out(path);
  out << "# schema=weights_v1\n";
  out << "expert";
  for (long t = 1; t <= rec.weights.cols(); ++t) out << ",t" << t;
  out << "\n";
  for (long i = 0; i < rec.weights.rows(); ++i) {
    out << i;
    for (long t = 0; t < rec.weights.cols(); ++t) {
      out << "," << format_double(rec.weights(i, t));
    }
    out << "\n";
  }
}

void write_gap_csv(const std::string& path, const game_record& rec) {
  std::ofstream out = open_out(path);
  out << "# schema=gap_v1\n";
  out << "t,gap,regret_x,regret_y,identity_residual\n";
  for (std::size_t k = 0; k < rec.checkpoints.size(); ++k) {
    out << rec.checkpoints[k] << "," << format_double(rec.gaps[k]) << ","
        << format_double(rec.regret_x[k]) << "," << format_double(rec.regret_y[k])
        << "," << format_double(rec.identity_residual[k]) << "\n";
  }
}

void write_sweep_csv(const std::string& path, const std::vector<sweep_row>& rows) {
  std::ofstream out = open_out(path);
  out << "# schema=sweep_v1\n";
  out << "T,seeds,mean_regret_center,se_regret_center,mean_regret_avg,se_regret_avg\n";
  for (const sweep_row& row : rows) {
    out << row.T << "," << row.seeds << "," << format_double(row.mean_center) << ","
        << format_double(row.se_center) << "," << format_double(row.mean_avg) << ","
        << format_double(row.se_avg) << "\n";
  }
}

void write_slope_csv(const std::string& path, const std::vector<slope_row>& rows) {
  std::ofstream out = open_out(path);
  out << "# schema=slope_v1\n";
  out << "metric,slope,half_width,intercept,points\n";
  for (const slope_row& row : rows) {
    out << row.metric << "," << format_double(row.slope) << ","
        << format_double(row.half_width) << "," << format_double(row.intercept) << ","
        << row.points << "\n";
  }
}

}  // namespace banditgv
