#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "run_config.hpp"

using decoy_lm05::RateFormula;
namespace cli = decoy_lm05::cli;

int main(int argc, char** argv) {
  CLI::App app{"Decoy-state key-rate toolkit for the LM05 two-way QKD protocol"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "Config file (key = value lines)");
  std::string output;
  app.add_option("-o,--output", output, "Write to file instead of stdout");

  // Overrides; each is applied only when actually passed (flags beat config
  // files, which beat the DECOY_LM05_CONFIG file, which beats defaults).
  double alpha = 0, eta_ab = 0, y0 = 0, e_det = 0, e0 = 0;
  double mu = 0, nu1 = 0, nu2 = 0;
  double l_start = 0, l_stop = 0, l_step = 0, f_ec = 0;
  std::uint64_t seed = 0, pulses = 0;
  std::vector<std::string> formula_names;
  bool optimize = false, no_optimize = false;
  app.add_option("--alpha", alpha, "Fiber loss [dB/km]");
  app.add_option("--eta-ab", eta_ab, "Detector/internal transmittance");
  app.add_option("--y0", y0, "Background yield");
  app.add_option("--e-det", e_det, "Detector misalignment error");
  app.add_option("--e0", e0, "Background error rate");
  app.add_option("--mu", mu, "Signal intensity");
  app.add_option("--nu1", nu1, "First decoy intensity");
  app.add_option("--nu2", nu2, "Second decoy intensity");
  app.add_option("--l-start", l_start, "Range start [km]");
  app.add_option("--l-stop", l_stop, "Range stop [km]");
  app.add_option("--l-step", l_step, "Range step [km]");
  app.add_option("--formula", formula_names, "Rate formula(s)")->delimiter(',');
  app.add_flag("--optimize", optimize, "Optimize mu per distance");
  app.add_flag("--no-optimize", no_optimize, "Use the fixed mu");
  app.add_option("--seed", seed, "Sampler master seed");
  app.add_option("--pulses", pulses, "Sampled pulses per intensity");
  app.add_option("--f-ec", f_ec, "Error-correction inefficiency");

  int threads = 1;
  auto* curve = app.add_subcommand("curve", "Rate-vs-distance CSV");
  curve->add_option("--threads", threads, "Parallel row workers")
      ->check(CLI::PositiveNumber);
  curve->fallthrough();

  double distance = 0;
  bool proxy = false;
  auto* optimize_cmd =
      app.add_subcommand("optimize", "Optimal signal intensity at one distance");
  optimize_cmd->add_option("--distance", distance, "Distance [km]");
  optimize_cmd->add_flag("--proxy", proxy,
                         "Maximize the 1+2 photon emission fraction instead");
  optimize_cmd->fallthrough();

  bool crossing = false;
  auto* cutoff =
      app.add_subcommand("cutoff", "Positive-rate cutoff per formula");
  cutoff->add_flag("--crossing", crossing,
                   "Intersection of exactly two formulas' curves");
  cutoff->fallthrough();

  auto* sample = app.add_subcommand("sample", "Monte-Carlo session CSV");
  sample->add_option("--threads", threads, "Parallel row workers")
      ->check(CLI::PositiveNumber);
  sample->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cli::RunConfig cfg;
  try {
    if (const char* env = std::getenv("DECOY_LM05_CONFIG"); env && *env) {
      cli::apply_config_file(cfg, env);
    }
    if (app.count("--config") > 0) cli::apply_config_file(cfg, config_path);
    if (app.count("--alpha") > 0) cfg.channel.alpha = alpha;
    if (app.count("--eta-ab") > 0) cfg.channel.eta_ab = eta_ab;
    if (app.count("--y0") > 0) cfg.channel.y0 = y0;
    if (app.count("--e-det") > 0) cfg.channel.e_det = e_det;
    if (app.count("--e0") > 0) cfg.channel.e0 = e0;
    if (app.count("--mu") > 0) cfg.intensities.mu = mu;
    if (app.count("--nu1") > 0) cfg.intensities.nu1 = nu1;
    if (app.count("--nu2") > 0) cfg.intensities.nu2 = nu2;
    if (app.count("--l-start") > 0) cfg.l_start = l_start;
    if (app.count("--l-stop") > 0) cfg.l_stop = l_stop;
    if (app.count("--l-step") > 0) cfg.l_step = l_step;
    if (app.count("--seed") > 0) cfg.seed = seed;
    if (app.count("--pulses") > 0) cfg.pulses = pulses;
    if (app.count("--f-ec") > 0) cfg.f_ec = f_ec;
    if (app.count("--optimize") > 0) cfg.optimize = true;
    if (app.count("--no-optimize") > 0) cfg.optimize = false;
    if (!formula_names.empty()) {
      cfg.formulas.clear();
      for (const std::string& name : formula_names) {
        cfg.formulas.push_back(cli::parse_formula(name));
      }
    }
    if (cfg.formulas.empty()) cfg.formulas = {RateFormula::Infinite};
    cli::validate_config(cfg, sample->parsed());
  } catch (const cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!output.empty()) {
    file.open(output);
    if (!file) {
      std::cerr << "error: cannot open output file '" << output << "'\n";
      return 2;
    }
    out = &file;
  }

  try {
    if (curve->parsed()) {
      cli::cmd_curve(cfg, threads, *out);
    } else if (optimize_cmd->parsed()) {
      const std::optional<double> at =
          optimize_cmd->count("--distance") > 0 ? std::optional(distance)
                                                : std::nullopt;
      cli::cmd_optimize(cfg, at, proxy, *out);
    } else if (cutoff->parsed()) {
      cli::cmd_cutoff(cfg, crossing, *out);
    } else {
      cli::cmd_sample(cfg, threads, *out);
    }
  } catch (const cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
