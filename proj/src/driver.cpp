#include "banditgv/driver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include "banditgv/barrier.hpp"
#include "banditgv/csv.hpp"
#include "banditgv/ensemble.hpp"
#include "banditgv/estimator.hpp"
#include "banditgv/game.hpp"
#include "banditgv/metrics.hpp"
#include "banditgv/runner.hpp"

namespace banditgv {

namespace {

const std::vector<std::string> kRunKeys = {
    "algo", "T", "T_list", "seeds", "seed_count",
    "domain.kind", "domain.dim", "domain.radius", "domain.lower", "domain.upper",
    "adversary.family", "adversary.ell", "adversary.u", "adversary.L",
    "adversary.lambda", "adversary.center", "adversary.center_a",
    "adversary.center_b", "adversary.G", "adversary.ell_a", "adversary.ell_b",
    "adversary.switch",
    "run.delta", "run.xi", "run.eta", "run.rows",
    "one_point.vt", "one_point.tol",
    "out.dir", "out.timing"};

const std::vector<std::string> kGameKeys = {
    "T", "seeds", "seed_count",
    "game.A", "game.m", "game.n",
    "game.x_lower", "game.x_upper", "game.y_lower", "game.y_upper",
    "game.eta_x", "game.eta_y", "game.tol", "game.scripted",
    "out.dir", "out.timing"};

Eigen::VectorXd to_vector(const std::vector<double>& v) {
  Eigen::VectorXd out(static_cast<long>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k) out[static_cast<long>(k)] = v[k];
  return out;
}

int worker_count(std::size_t jobs) {
  long n = 0;
  if (const char* env = std::getenv("BANDITGV_THREADS")) {
    n = std::strtol(env, nullptr, 10);
  }
  if (n <= 0) n = static_cast<long>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(n),
                                                std::max<std::size_t>(jobs, 1)));
}

// Runs job(k) for k in [0, jobs) on the worker pool; each job owns its state.
template <typename Fn>
void fan_out(std::size_t jobs, Fn&& job) {
  const int workers = worker_count(jobs);
  if (workers <= 1) {
    for (std::size_t k = 0; k < jobs; ++k) job(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next.fetch_add(1); k < jobs; k = next.fetch_add(1)) job(k);
    });
  }
  for (std::thread& th : pool) th.join();
}

std::vector<std::uint64_t> resolve_seeds(const config_map& cfg) {
  const bool has_list = config_has(cfg, "seeds");
  const bool has_count = config_has(cfg, "seed_count");
  require_config(!(has_list && has_count),
                 "config: give either 'seeds' or 'seed_count', not both");
  if (has_list) return get_u64_list(cfg, "seeds");
  std::vector<std::uint64_t> seeds;
  const long n = has_count ? get_long(cfg, "seed_count") : 1;
  require_config(n >= 1, "config key 'seed_count': must be at least 1");
  for (long k = 1; k <= n; ++k) seeds.push_back(static_cast<std::uint64_t>(k));
  return seeds;
}

domain domain_from(const config_map& cfg) {
  const std::string kind = get_string(cfg, "domain.kind");
  if (kind == "ball") {
    return make_ball(static_cast<int>(get_long(cfg, "domain.dim")),
                     get_double(cfg, "domain.radius"));
  }
  if (kind == "box") {
    return make_box(to_vector(get_double_list(cfg, "domain.lower")),
                    to_vector(get_double_list(cfg, "domain.upper")));
  }
  require_config(false, "config key 'domain.kind': expected ball or box");
  return {};
}

loss_sequence adversary_from(const config_map& cfg, long T) {
  const std::string family = get_string(cfg, "adversary.family");
  if (family == "stationary_linear") {
    return make_stationary_linear(to_vector(get_double_list(cfg, "adversary.ell")), T,
                                  get_double(cfg, "adversary.L"));
  }
  if (family == "alternating_linear") {
    return make_alternating_linear(to_vector(get_double_list(cfg, "adversary.u")), T,
                                   get_double(cfg, "adversary.L"));
  }
  if (family == "strong_quadratic") {
    const Eigen::VectorXd c = to_vector(get_double_list(cfg, "adversary.center"));
    Eigen::MatrixXd centers(c.size(), T);
    centers.colwise() = c;
    return make_strong_quadratic(get_double(cfg, "adversary.lambda"), centers,
                                 get_double(cfg, "adversary.G"));
  }
  if (family == "alternating_centers") {
    return make_alternating_centers(
        get_double(cfg, "adversary.lambda"),
        to_vector(get_double_list(cfg, "adversary.center_a")),
        to_vector(get_double_list(cfg, "adversary.center_b")), T,
        get_double(cfg, "adversary.G"));
  }
  if (family == "piecewise_linear") {
    const long cut = get_long_or(cfg, "adversary.switch", T / 2);
    require_config(cut >= 1 && cut < T,
                   "config key 'adversary.switch': must lie strictly inside 1..T");
    const double L = get_double(cfg, "adversary.L");
    const loss_sequence a = make_stationary_linear(
        to_vector(get_double_list(cfg, "adversary.ell_a")), cut, L);
    const loss_sequence b = make_stationary_linear(
        to_vector(get_double_list(cfg, "adversary.ell_b")), T - cut, L);
    return make_piecewise({a, b}, {cut, T - cut});
  }
  require_config(false, "config key 'adversary.family': unknown family '" + family + "'");
  return {};
}

run_overrides overrides_from(const config_map& cfg) {
  run_overrides ov;
  ov.delta = get_double_opt(cfg, "run.delta");
  ov.xi = get_double_opt(cfg, "run.xi");
  ov.eta_fixed = get_double_opt(cfg, "run.eta");
  ov.record_rows = get_flag_or(cfg, "run.rows", true);
  ov.timing = get_flag_or(cfg, "out.timing", false);
  return ov;
}

run_record dispatch(const std::string& algo, const config_map& cfg,
                    const loss_sequence& seq, const domain& dom, long T,
                    std::uint64_t seed, const run_overrides& ov) {
  if (algo == "gv_convex") {
    return run_two_point(two_point_variant::gv_convex, seq, dom, T, seed, ov);
  }
  if (algo == "gv_strongly_convex") {
    return run_two_point(two_point_variant::gv_strongly_convex, seq, dom, T, seed, ov);
  }
  if (algo == "variance") {
    return run_two_point(two_point_variant::variance, seq, dom, T, seed, ov);
  }
  if (algo == "small_loss") {
    return run_two_point(two_point_variant::small_loss, seq, dom, T, seed, ov);
  }
  if (algo == "sphere") return run_sphere_sgd(seq, dom, T, seed, ov);
  if (algo == "dynamic") return run_dynamic(seq, dom, T, seed, ov);
  if (algo == "universal") return run_universal(seq, dom, T, seed, ov);
  if (algo == "one_point") {
    one_point_overrides op;
    op.eta = get_double_opt(cfg, "run.eta");
    op.vt = get_double_opt(cfg, "one_point.vt");
    op.tol = get_double_opt(cfg, "one_point.tol");
    op.record_rows = ov.record_rows;
    op.timing = ov.timing;
    return run_one_point(seq, dom, T, seed, op);
  }
  require_config(false, "config key 'algo': unknown algorithm '" + algo + "'");
  return {};
}

std::string rows_schema(const std::string& algo) {
  if (algo == "sphere") return "sphere_rows";
  if (algo == "one_point") return "one_point_rows";
  if (algo == "dynamic" || algo == "universal") return "ensemble_rows";
  return "two_point_rows";
}

}  // namespace

experiment_output run_experiment(const config_map& cfg, const std::string& outdir) {
  reject_unknown_keys(cfg, kRunKeys);
  require_config(config_has(cfg, "T"), "config key 'T' is required for a run");
  const long T = get_long(cfg, "T");
  const std::string algo = get_string(cfg, "algo");
  const domain dom = domain_from(cfg);
  const loss_sequence seq = adversary_from(cfg, T);
  const run_overrides ov = overrides_from(cfg);
  const std::vector<std::uint64_t> seeds = resolve_seeds(cfg);
  const std::uint64_t hash = config_hash(cfg);

  std::filesystem::create_directories(outdir);
  std::vector<run_record> records(seeds.size());
  fan_out(seeds.size(), [&](std::size_t k) {
    records[k] = dispatch(algo, cfg, seq, dom, T, seeds[k], ov);
    records[k].config_hash = hash;
  });

  experiment_output out;
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    if (ov.record_rows) {
      const std::string path =
          outdir + "/rows_seed" + std::to_string(seeds[k]) + ".csv";
      write_rows_csv(path, records[k], rows_schema(algo));
      out.files.push_back(path);
    }
    if (records[k].weights.size() > 0) {
      const std::string path =
          outdir + "/weights_seed" + std::to_string(seeds[k]) + ".csv";
      write_weights_csv(path, records[k]);
      out.files.push_back(path);
    }
  }
  const std::string summary = outdir + "/summary.csv";
  write_summary_csv(summary, records);
  out.files.push_back(summary);
  return out;
}

experiment_output sweep_experiment(const config_map& cfg, const std::string& outdir) {
  reject_unknown_keys(cfg, kRunKeys);
  require_config(config_has(cfg, "T_list"), "config key 'T_list' is required for a sweep");
  const std::vector<long> horizons = get_long_list(cfg, "T_list");
  const std::string algo = get_string(cfg, "algo");
  const domain dom = domain_from(cfg);
  const std::vector<std::uint64_t> seeds = resolve_seeds(cfg);
  run_overrides ov = overrides_from(cfg);
  ov.record_rows = false;  // aggregates only
  const std::uint64_t hash = config_hash(cfg);

  std::filesystem::create_directories(outdir);
  std::vector<sweep_row> table;
  std::vector<std::pair<double, double>> center_points, avg_points;
  for (const long T : horizons) {
    const loss_sequence seq = adversary_from(cfg, T);
    std::vector<run_record> records(seeds.size());
    fan_out(seeds.size(), [&](std::size_t k) {
      records[k] = dispatch(algo, cfg, seq, dom, T, seeds[k], ov);
      records[k].config_hash = hash;
    });
    std::vector<double> center, avg;
    for (const run_record& rec : records) {
      center.push_back(rec.regret_center);
      avg.push_back(rec.regret_avg);
    }
    const seed_stats sc = aggregate(center);
    const seed_stats sa = aggregate(avg);
    table.push_back({T, sc.n, sc.mean, sc.se, sa.mean, sa.se});
    center_points.emplace_back(static_cast<double>(T), sc.mean);
    avg_points.emplace_back(static_cast<double>(T), sa.mean);
  }

  std::vector<slope_row> slopes;
  const slope_fit_result center_fit = slope_fit(center_points);
  slopes.push_back({"regret_center", center_fit.slope, center_fit.half_width,
                    center_fit.intercept, center_fit.used});
  const slope_fit_result avg_fit = slope_fit(avg_points);
  slopes.push_back(
      {"regret_avg", avg_fit.slope, avg_fit.half_width, avg_fit.intercept, avg_fit.used});

  experiment_output out;
  const std::string sweep_path = outdir + "/sweep.csv";
  write_sweep_csv(sweep_path, table);
  out.files.push_back(sweep_path);
  const std::string slope_path = outdir + "/slope.csv";
  write_slope_csv(slope_path, slopes);
  out.files.push_back(slope_path);
  return out;
}

experiment_output game_experiment(const config_map& cfg, const std::string& outdir) {
  reject_unknown_keys(cfg, kGameKeys);
  game_config game;
  const int m = static_cast<int>(get_long(cfg, "game.m"));
  const int n = static_cast<int>(get_long(cfg, "game.n"));
  const std::vector<double> a = get_double_list(cfg, "game.A");
  require_config(static_cast<long>(a.size()) == static_cast<long>(m) * n,
                 "config key 'game.A': expected m*n entries in row-major order");
  game.A.resize(m, n);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) game.A(r, c) = a[static_cast<std::size_t>(r) * n + c];
  }
  game.X = make_box(to_vector(get_double_list(cfg, "game.x_lower")),
                    to_vector(get_double_list(cfg, "game.x_upper")));
  game.Y = make_box(to_vector(get_double_list(cfg, "game.y_lower")),
                    to_vector(get_double_list(cfg, "game.y_upper")));
  require_config(game.X.dim == m && game.Y.dim == n,
                 "config: game box dimensions must match game.m and game.n");
  game.T = get_long(cfg, "T");
  game.eta_x = get_double_opt(cfg, "game.eta_x").value_or(0.0);
  game.eta_y = get_double_opt(cfg, "game.eta_y").value_or(0.0);
  game.tol = get_double_opt(cfg, "game.tol").value_or(0.0);
  const bool scripted = get_flag_or(cfg, "game.scripted", false);
  const std::vector<std::uint64_t> seeds = resolve_seeds(cfg);

  std::filesystem::create_directories(outdir);
  std::vector<game_record> records(seeds.size());
  fan_out(seeds.size(), [&](std::size_t k) {
    records[k] = scripted ? run_game_scripted(game, seeds[k]) : run_game(game, seeds[k]);
  });

  experiment_output out;
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    const std::string path = outdir + "/gap_seed" + std::to_string(seeds[k]) + ".csv";
    write_gap_csv(path, records[k]);
    out.files.push_back(path);
  }
  return out;
}

experiment_output diagnose_experiment(int d, long rounds, int trials,
                                      std::uint64_t seed0, const std::string& outdir) {
  require_config(d >= 1 && rounds >= 1 && trials >= 1,
                 "diagnose: d, rounds, and trials must be positive");
  std::filesystem::create_directories(outdir);
  std::vector<rho_summary> summaries(static_cast<std::size_t>(trials));
  fan_out(static_cast<std::size_t>(trials), [&](std::size_t k) {
    rng gen(seed0 + k);
    std::vector<int> draws;
    draws.reserve(static_cast<std::size_t>(rounds));
    for (long t = 0; t < rounds; ++t) draws.push_back(sample_coordinate(gen, d));
    summaries[k] = rho_statistics(draws, d);
  });

  const std::string path = outdir + "/diagnose.csv";
  std::ofstream outcsv(path, std::ios::binary);
  require(outcsv.good(), "csv: cannot open '" + path + "' for writing");
  outcsv << "# schema=diagnose_v1\n";
  outcsv << "trial,seed,mean_gap,se_gap,mean_coupon,se_coupon,coupon_windows,"
            "mean_rho,se_rho,mean_max_rho,se_max_rho\n";
  for (int k = 0; k < trials; ++k) {
    const rho_summary& s = summaries[static_cast<std::size_t>(k)];
    outcsv << k << "," << (seed0 + static_cast<std::uint64_t>(k)) << ","
           << format_double(s.mean_gap) << "," << format_double(s.se_gap) << ","
           << format_double(s.mean_coupon) << "," << format_double(s.se_coupon) << ","
           << s.coupon_windows << "," << format_double(s.mean_rho) << ","
           << format_double(s.se_rho) << "," << format_double(s.mean_max_rho) << ","
           << format_double(s.se_max_rho) << "\n";
  }
  experiment_output out;
  out.files.push_back(path);
  return out;
}

}  // namespace banditgv
