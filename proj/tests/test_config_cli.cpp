#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "banditgv/check.hpp"
#include "banditgv/config.hpp"
#include "banditgv/csv.hpp"
#include "banditgv/record.hpp"

using namespace banditgv;

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

struct temp_file {
  std::filesystem::path path;
  explicit temp_file(const std::string& name)
      : path(std::filesystem::temp_directory_path() / name) {}
  ~temp_file() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
};

}  // namespace

TEST_CASE("config parser: comments, blanks, trimming, insertion order") {
  const std::string text =
      "# experiment header\n"
      "\n"
      "domain.kind = ball\n"
      "runner.T=128\n"
      "  adversary.u = 0.6, 0.8\t\n"
      "out.dir = runs/a\n";
  const config_map cfg = parse_config_text(text);
  REQUIRE(cfg.entries.size() == 4);
  CHECK(cfg.entries[0].first == "domain.kind");
  CHECK(cfg.entries[0].second == "ball");
  CHECK(cfg.entries[1].first == "runner.T");
  CHECK(cfg.entries[1].second == "128");
  CHECK(cfg.entries[2].second == "0.6, 0.8");
  CHECK(config_has(cfg, "out.dir"));
  CHECK_FALSE(config_has(cfg, "out"));
  CHECK(get_string(cfg, "domain.kind") == "ball");
  CHECK(get_long(cfg, "runner.T") == 128);
  const std::vector<double> u = get_double_list(cfg, "adversary.u");
  REQUIRE(u.size() == 2);
  CHECK(u[0] == 0.6);
  CHECK(u[1] == 0.8);
}

TEST_CASE("config parser: line-precise diagnostics") {
  CHECK_THROWS_WITH_AS(parse_config_text("a = 1\nbroken line\n"),
                       "config line 2: expected key = value", config_error);
  CHECK_THROWS_WITH_AS(parse_config_text("a = 1\n# note\na = 2\n"),
                       "config line 3: duplicate key 'a'", config_error);
  CHECK_THROWS_WITH_AS(parse_config_text(" = 5\n"), "config line 1: empty key",
                       config_error);
}

TEST_CASE("config getters: typed access, fallbacks, strict value syntax") {
  const config_map cfg = parse_config_text(
      "runner.delta = 0.25\nrunner.seeds = 3, 5\nout.timing = 1\nbad.num = 1x\n"
      "bad.flag = yes\nneg = -4\n");
  CHECK(get_double(cfg, "runner.delta") == 0.25);
  CHECK(get_double_opt(cfg, "runner.delta").value() == 0.25);
  CHECK_FALSE(get_double_opt(cfg, "runner.eta").has_value());
  CHECK(get_string_or(cfg, "out.dir", "out") == "out");
  CHECK(get_long_or(cfg, "runner.T", 64) == 64);
  CHECK(get_flag_or(cfg, "out.timing", false));
  CHECK_FALSE(get_flag_or(cfg, "out.absent", false));
  const std::vector<std::uint64_t> seeds = get_u64_list(cfg, "runner.seeds");
  REQUIRE(seeds.size() == 2);
  CHECK(seeds[0] == 3);
  CHECK(seeds[1] == 5);
  CHECK(get_long(cfg, "neg") == -4);
  CHECK_THROWS_AS(get_double(cfg, "bad.num"), config_error);
  CHECK_THROWS_AS(get_flag_or(cfg, "bad.flag", true), config_error);
  CHECK_THROWS_AS(get_u64(cfg, "neg"), config_error);
  CHECK_THROWS_AS(get_string(cfg, "missing.key"), config_error);
}

TEST_CASE("unknown keys are rejected by name") {
  const config_map cfg = parse_config_text("runner.T = 8\nrunner.Tmax = 9\n");
  CHECK_NOTHROW(reject_unknown_keys(cfg, {"runner.T", "runner.Tmax"}));
  CHECK_THROWS_WITH_AS(reject_unknown_keys(cfg, {"runner.T"}),
                       "config key 'runner.Tmax' is not recognized", config_error);
}

TEST_CASE("config hash: canonical over ordering, sensitive to content") {
  const config_map a = parse_config_text("x = 1\ny = 2\n");
  const config_map b = parse_config_text("y = 2\nx = 1\n");
  CHECK(config_hash(a) == config_hash(b));
  const config_map c = parse_config_text("x = 1\ny = 3\n");
  CHECK(config_hash(a) != config_hash(c));
  const config_map d = parse_config_text("x = 1\ny = 2\nz = 0\n");
  CHECK(config_hash(a) != config_hash(d));
}

TEST_CASE("double formatting round-trips exactly") {
  for (const double x : {1.0 / 3.0, 0.1, 1e-300, 12345.678901234567, -2.5e17}) {
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(2.0) == "2");
}

TEST_CASE("round trace files: schema line, header, integer columns") {
  run_record rec;
  rec.columns = {"t", "i", "v"};
  rec.integer_column = {true, true, false};
  rec.rows.resize(2, 3);
  rec.rows << 1.0, 2.0, 0.5, 2.0, 1.0, -0.25;
  const temp_file file("banditgv_test_rows.csv");
  write_rows_csv(file.path.string(), rec, "test_rows");
  const std::vector<std::string> lines = read_lines(file.path);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "# schema=test_rows_v1");
  CHECK(lines[1] == "t,i,v");
  CHECK(lines[2] == "1,2,0.5");
  CHECK(lines[3] == "2,1,-0.25");
}

TEST_CASE("summary files: pinned header and per-seed rows") {
  run_record rec;
  rec.seed = 7;
  rec.regret_avg = 1.5;
  rec.regret_center = 2.5;
  rec.vt = 3.0;
  rec.vbar = 4.0;
  rec.ft = 0.0;
  rec.config_hash = 99;
  const temp_file file("banditgv_test_summary.csv");
  write_summary_csv(file.path.string(), {rec});
  const std::vector<std::string> lines = read_lines(file.path);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "# schema=summary_v1");
  CHECK(lines[1] == "seed,regret_avg,regret_center,VT,VbarT,FT,wallclock_ms,config_hash");
  CHECK(lines[2] == "7,1.5,2.5,3,4,0,0,99");
}
