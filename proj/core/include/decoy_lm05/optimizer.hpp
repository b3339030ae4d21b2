#pragma once

#include <functional>
#include <optional>

#include "decoy_lm05/channel.hpp"
#include "decoy_lm05/key_rates.hpp"

namespace decoy_lm05 {

/// What to optimize: the rate formula, its fixed decoy intensities, the
/// signal-intensity search interval and the absolute tolerance on mu*.
struct OptimizeSpec {
  RateFormula formula = RateFormula::Infinite;
  double nu1 = 0.05;      ///< fixed decoy intensities (finite formulas only)
  double nu2 = 0.0;
  double mu_min = 0.01;   ///< search interval; must exceed nu1 + nu2
  double mu_max = 2.0;
  double tolerance = 1e-6;
  double f_ec = kDefaultFEc;
};

/// Argmax and value of a scalar maximization.
struct Optimum {
  double x = 0.0;
  double value = 0.0;
};

/// Maximizes a scalar function on [lo, hi] to absolute tolerance `tol` in x:
/// a 16-point pre-scan locates the best coarse bracket (guarding against
/// non-unimodal objectives), then golden-section search refines it.
/// Throws std::invalid_argument on an empty interval.
Optimum maximize_scalar(const std::function<double(double)>& fn, double lo,
                        double hi, double tol);

/// Maximizes the selected key rate over the signal intensity at the
/// distance stored in `params`.  An all-negative rate is a valid result
/// (value < 0), not an error.
Optimum optimize_mu(const ChannelParams& params, const OptimizeSpec& spec);

/// Largest distance in [0, l_max] at which the mu-optimized rate stays
/// positive, by bisection at 0.1 km resolution.  Returns l_max itself if the
/// rate is still positive there.  Throws std::domain_error if the optimized
/// rate is not positive at l = 0.
double cutoff_distance(const ChannelParams& params, const OptimizeSpec& spec,
                       double l_max);

/// Distance where the two mu-optimized rate curves intersect, by bisection
/// at 0.1 km resolution.  Returns std::nullopt when the rate difference has
/// the same sign at 0 and l_max (no crossing bracketed).
std::optional<double> crossing_distance(const ChannelParams& params,
                                        const OptimizeSpec& spec_a,
                                        const OptimizeSpec& spec_b,
                                        double l_max);

}  // namespace decoy_lm05
