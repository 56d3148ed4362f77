#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "banditgv/accept.hpp"
#include "banditgv/check.hpp"
#include "banditgv/config.hpp"
#include "banditgv/driver.hpp"

namespace {

struct experiment_args {
  std::string config_path;
  std::string out;
  bool timing = false;
};

void add_experiment_options(CLI::App* sub, experiment_args* args) {
  sub->add_option("config", args->config_path, "key = value configuration file")
      ->required();
  sub->add_option("--out", args->out, "output directory (overrides the out.dir key)");
  sub->add_flag("--timing", args->timing,
                "record measured wall-clock milliseconds in summaries "
                "(off by default so outputs are byte-reproducible)");
}

void set_key(banditgv::config_map& cfg, const std::string& key,
             const std::string& value) {
  for (auto& kv : cfg.entries) {
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  }
  cfg.entries.emplace_back(key, value);
}

// Loads the config, applies CLI overrides, and resolves the output directory.
banditgv::config_map load_config(const experiment_args& args, std::string* outdir) {
  banditgv::config_map cfg = banditgv::parse_config_file(args.config_path);
  if (args.timing) set_key(cfg, "out.timing", "1");
  *outdir = !args.out.empty() ? args.out : banditgv::get_string_or(cfg, "out.dir", "out");
  return cfg;
}

void report(const banditgv::experiment_output& out) {
  for (const std::string& f : out.files) std::cout << "wrote " << f << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bandit convex optimization with gradient-variation guarantees"};
  app.require_subcommand(1);

  experiment_args run_args;
  CLI::App* cmd_run =
      app.add_subcommand("run", "one algorithm at one horizon over a seed list");
  add_experiment_options(cmd_run, &run_args);

  experiment_args sweep_args;
  CLI::App* cmd_sweep =
      app.add_subcommand("sweep", "one algorithm across a horizon list with slopes");
  add_experiment_options(cmd_sweep, &sweep_args);

  experiment_args game_args;
  CLI::App* cmd_game =
      app.add_subcommand("game", "bilinear min-max self-play with gap trajectories");
  add_experiment_options(cmd_game, &game_args);

  int diag_d = 3;
  long diag_rounds = 100000;
  int diag_trials = 20;
  std::uint64_t diag_seed = 1;
  std::string diag_out = "out";
  CLI::App* cmd_diag =
      app.add_subcommand("diagnose", "coordinate-sampling gap statistics");
  cmd_diag->add_option("--d", diag_d, "dimension")->check(CLI::PositiveNumber);
  cmd_diag->add_option("--rounds", diag_rounds, "draws per trial")
      ->check(CLI::PositiveNumber);
  cmd_diag->add_option("--trials", diag_trials, "independent trials")
      ->check(CLI::PositiveNumber);
  cmd_diag->add_option("--seed", diag_seed, "seed of the first trial");
  cmd_diag->add_option("--out", diag_out, "output directory");

  std::vector<int> only;
  CLI::App* cmd_accept =
      app.add_subcommand("accept", "acceptance checks, one PASS/FAIL line each");
  cmd_accept->add_option("--only", only, "criterion ids to run (repeatable; default all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems share the config exit code
  }

  try {
    if (cmd_run->parsed()) {
      std::string outdir;
      const banditgv::config_map cfg = load_config(run_args, &outdir);
      report(banditgv::run_experiment(cfg, outdir));
    } else if (cmd_sweep->parsed()) {
      std::string outdir;
      const banditgv::config_map cfg = load_config(sweep_args, &outdir);
      report(banditgv::sweep_experiment(cfg, outdir));
    } else if (cmd_game->parsed()) {
      std::string outdir;
      const banditgv::config_map cfg = load_config(game_args, &outdir);
      report(banditgv::game_experiment(cfg, outdir));
    } else if (cmd_diag->parsed()) {
      report(banditgv::diagnose_experiment(diag_d, diag_rounds, diag_trials, diag_seed,
                                           diag_out));
    } else if (cmd_accept->parsed()) {
      if (banditgv::run_acceptance(only) > 0) return 1;
    }
  } catch (const banditgv::config_error& e) {
    std::cerr << "config error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
  return 0;
}
