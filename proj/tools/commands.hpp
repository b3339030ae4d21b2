#pragma once

#include <iosfwd>
#include <optional>

#include "run_config.hpp"

namespace decoy_lm05::cli {

/// Rate (and mu used) per selected formula, one CSV row per distance in the
/// configured range.  `threads` > 1 computes rows in parallel; the output is
/// byte-identical regardless.
void cmd_curve(const RunConfig& cfg, int threads, std::ostream& out);

/// One-line report of the optimal signal intensity at one distance.
/// `distance` overrides cfg.l_start; `proxy` maximizes the decoy-free
/// emission objective (1 and 2 photon fraction) instead of a key rate.
void cmd_optimize(const RunConfig& cfg, std::optional<double> distance,
                  bool proxy, std::ostream& out);

/// Cutoff distance per selected formula (largest distance with a positive
/// optimized rate, searched up to cfg.l_stop); with `crossing`, the
/// intersection distance of exactly two formulas' optimized curves instead.
void cmd_cutoff(const RunConfig& cfg, bool crossing, std::ostream& out);

/// Monte-Carlo session per distance: sampled observables, their deviation
/// from the closed form, both bound estimates, and a count of sampled bounds
/// that landed on the wrong side of the generating model.
void cmd_sample(const RunConfig& cfg, int threads, std::ostream& out);

}  // namespace decoy_lm05::cli
