#include "commands.hpp"

#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <ostream>
#include <thread>
#include <vector>

#include "decoy_lm05/combined_bounds.hpp"
#include "decoy_lm05/finite_bounds.hpp"
#include "decoy_lm05/optimizer.hpp"
#include "decoy_lm05/sampler.hpp"

namespace decoy_lm05::cli {

namespace {

std::vector<double> distance_grid(const RunConfig& cfg) {
  const auto n = static_cast<std::size_t>(
                     std::floor((cfg.l_stop - cfg.l_start) / cfg.l_step + 1e-9)) +
                 1;
  std::vector<double> grid;
  grid.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid.push_back(cfg.l_start + static_cast<double>(i) * cfg.l_step);
  }
  return grid;
}

/// Computes rows[i] = row_fn(i) with up to `threads` workers.  Row order and
/// content are independent of the worker count.
std::vector<std::string> compute_rows(
    std::size_t n, int threads,
    const std::function<std::string(std::size_t)>& row_fn) {
  std::vector<std::string> rows(n);
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) rows[i] = row_fn(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          rows[i] = row_fn(i);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return rows;
}

OptimizeSpec spec_for(const RunConfig& cfg, RateFormula formula) {
  OptimizeSpec spec;
  spec.formula = formula;
  spec.nu1 = cfg.intensities.nu1;
  spec.nu2 = cfg.intensities.nu2;
  spec.f_ec = cfg.f_ec;
  return spec;
}

}  // namespace

void cmd_curve(const RunConfig& cfg, int threads, std::ostream& out) {
  const std::vector<double> grid = distance_grid(cfg);

  std::string header = "distance_km";
  for (RateFormula f : cfg.formulas) {
    header += ",rate_";
    header += formula_name(f);
    header += ",mu_";
    header += formula_name(f);
  }
  out << header << '\n';

  const auto row_fn = [&](std::size_t i) {
    ChannelParams params = cfg.channel;
    params.distance_km = grid[i];
    std::string row = format_number(grid[i]);
    for (RateFormula f : cfg.formulas) {
      double mu_used = cfg.intensities.mu;
      double rate;
      if (cfg.optimize) {
        const Optimum best = optimize_mu(params, spec_for(cfg, f));
        mu_used = best.x;
        rate = best.value;
      } else {
        rate = rate_for(f, params, cfg.intensities, mu_used, cfg.f_ec);
      }
      row += ',';
      row += format_number(rate);
      row += ',';
      row += format_number(mu_used);
    }
    row += '\n';
    return row;
  };

  for (const std::string& row : compute_rows(grid.size(), threads, row_fn)) {
    out << row;
  }
}

void cmd_optimize(const RunConfig& cfg, std::optional<double> distance,
                  bool proxy, std::ostream& out) {
  if (proxy) {
    // Fraction of emitted pulses carrying one or two photons; the only
    // mu-dependence the non-decoy rate rewards.
    const auto emission = [](double mu) {
      return std::exp(-mu) * (mu + mu * mu / 2.0);
    };
    const OptimizeSpec defaults;
    const Optimum best = maximize_scalar(emission, defaults.mu_min,
                                         defaults.mu_max, defaults.tolerance);
    out << "objective=emission_proxy mu_star=" << format_number(best.x)
        << " value=" << format_number(best.value) << '\n';
    return;
  }
  if (cfg.formulas.size() != 1) {
    throw ConfigError("optimize needs exactly one formula");
  }
  ChannelParams params = cfg.channel;
  params.distance_km = distance.value_or(cfg.l_start);
  const RateFormula f = cfg.formulas.front();
  const Optimum best = optimize_mu(params, spec_for(cfg, f));
  out << "formula=" << formula_name(f)
      << " distance_km=" << format_number(params.distance_km)
      << " mu_star=" << format_number(best.x)
      << " rate_star=" << format_number(best.value) << '\n';
}

void cmd_cutoff(const RunConfig& cfg, bool crossing, std::ostream& out) {
  ChannelParams params = cfg.channel;
  if (crossing) {
    if (cfg.formulas.size() != 2) {
      throw ConfigError("--crossing needs exactly two formulas");
    }
    const std::optional<double> at =
        crossing_distance(params, spec_for(cfg, cfg.formulas[0]),
                          spec_for(cfg, cfg.formulas[1]), cfg.l_stop);
    out << "formula_a=" << formula_name(cfg.formulas[0])
        << " formula_b=" << formula_name(cfg.formulas[1]) << " crossing_km="
        << (at ? format_number(*at) : std::string("none")) << '\n';
    return;
  }
  for (RateFormula f : cfg.formulas) {
    const double cutoff = cutoff_distance(params, spec_for(cfg, f), cfg.l_stop);
    out << "formula=" << formula_name(f)
        << " cutoff_km=" << format_number(cutoff) << '\n';
  }
}

void cmd_sample(const RunConfig& cfg, int threads, std::ostream& out) {
  const std::vector<double> grid = distance_grid(cfg);

  out << "distance_km,q_mu,e_mu,q_nu1,e_nu1,q_nu2,e_nu2"
         ",q_mu_analytic,e_mu_analytic,abs_err_q_mu"
         ",y0_l,y1_l,y1_u,y2_l,e1_u,e2_u,q1_l,q2_l"
         ",y12_l,q12_l,eff_err_u,bound_violations\n";

  const auto row_fn = [&](std::size_t i) {
    ChannelParams params = cfg.channel;
    params.distance_km = grid[i];
    const SampleSpec session{cfg.pulses, derive_seed(cfg.seed, i)};
    const SampleResult sampled =
        sample_observables(params, cfg.intensities, session);
    const Observables& obs = sampled.obs;
    const GainQber analytic = total_gain_and_qber(params, cfg.intensities.mu);

    const FiniteBounds fb =
        estimate_finite(obs, cfg.intensities, Y1UpperMode::Genuine, params);
    const CombinedBounds cb = estimate_combined(obs, cfg.intensities, params.e0);

    // Sampling noise can push an estimate past the generating model; count
    // the bounds that landed on the wrong side (skipping undefined ones).
    const double y1 = yield_i(params, 1);
    const double y2 = yield_i(params, 2);
    const double e1 = error_i(params, 1);
    const double e2 = error_i(params, 2);
    const double q1 = gain_i(params, cfg.intensities.mu, 1);
    const double q2 = gain_i(params, cfg.intensities.mu, 2);
    const double eff_true = (e1 * q1 + e2 * q2) / (q1 + q2);
    int violations = 0;
    if (fb.y0_l > params.y0) ++violations;
    if (fb.y1_l > y1) ++violations;
    if (fb.y2_l > y2) ++violations;
    if (fb.e1_defined && fb.e1_u < e1) ++violations;
    if (fb.e2_defined && fb.e2_u < e2) ++violations;
    if (cb.y12_l > y1 + y2) ++violations;
    if (cb.q12_l > q1 + q2) ++violations;
    if (cb.eff_defined && cb.eff_err_u < eff_true) ++violations;

    const double values[] = {grid[i],        obs.q_mu,      obs.e_mu,
                             obs.q_nu1,      obs.e_nu1,     obs.q_nu2,
                             obs.e_nu2,      analytic.gain, analytic.qber,
                             std::abs(obs.q_mu - analytic.gain),
                             fb.y0_l,        fb.y1_l,       fb.y1_u,
                             fb.y2_l,        fb.e1_u,       fb.e2_u,
                             fb.q1_l,        fb.q2_l,       cb.y12_l,
                             cb.q12_l,       cb.eff_err_u};
    std::string row;
    for (double v : values) {
      if (!row.empty()) row += ',';
      row += format_number(v);
    }
    row += ',';
    row += std::to_string(violations);
    row += '\n';
    return row;
  };

  for (const std::string& row : compute_rows(grid.size(), threads, row_fn)) {
    out << row;
  }
}

}  // namespace decoy_lm05::cli
