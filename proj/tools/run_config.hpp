#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "decoy_lm05/channel.hpp"
#include "decoy_lm05/key_rates.hpp"

namespace decoy_lm05::cli {

/// Configuration problem (bad file syntax, bad value, inconsistent range).
/// Reported on stderr and mapped to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Everything a subcommand needs, merged from defaults, config file(s) and
/// command-line flags (in that order; later sources win).
struct RunConfig {
  ChannelParams channel;     ///< distance_km unused; rows come from the range
  IntensitySet intensities;  ///< signal + decoy intensities
  double l_start = 0.0;      ///< km
  double l_stop = 60.0;      ///< km
  double l_step = 1.0;       ///< km
  std::vector<RateFormula> formulas;  ///< empty means {Infinite}
  bool optimize = false;     ///< per-distance mu optimization in curve rows
  std::uint64_t seed = 1;
  std::uint64_t pulses = 100000;
  double f_ec = kDefaultFEc;
};

/// Maps a formula name (as used in config files, flags and CSV headers) to
/// the enum.  Throws ConfigError on an unknown name.
RateFormula parse_formula(const std::string& name);

/// Inverse of parse_formula.
const char* formula_name(RateFormula formula);

/// True for formulas whose evaluation consumes the decoy intensities.
bool uses_decoys(RateFormula formula);

/// Applies `key = value` assignments from a config file on top of `cfg`.
/// Throws ConfigError with a "path:line: message" prefix on any problem.
void apply_config_file(RunConfig& cfg, const std::string& path);

/// Cross-field validation after every source has been merged.  Throws
/// ConfigError.  `sampling` additionally enforces the sampler's and the
/// full intensity set's invariants (the sampler exercises all three
/// intensities regardless of formula selection).
void validate_config(const RunConfig& cfg, bool sampling);

/// Shortest decimal form faithful to `v` within 10 significant digits;
/// locale-independent.
std::string format_number(double v);

}  // namespace decoy_lm05::cli
