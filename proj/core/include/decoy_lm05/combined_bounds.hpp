#pragma once

#include "decoy_lm05/channel.hpp"

namespace decoy_lm05 {

/// Joint estimates treating the single- and double-photon signal as one
/// lumped contribution: a lower bound on Y1 + Y2, the derived effective-gain
/// lower bound, and an upper bound on the lumped error rate.
///
/// When q12_l is zero the effective error has no finite bound; it is
/// reported as 1/2 with `eff_defined` cleared (the lumped key-rate
/// contribution is zero in that case regardless).
struct CombinedBounds {
  double y12_l = 0.0;
  double q12_l = 0.0;
  double eff_err_u = 0.5;
  bool eff_defined = false;
};

/// Lower bound on Y1 + Y2.  Reuses the single-photon lower bound y1_l,
/// which tightens the estimate considerably over a bound from the decoy
/// differences alone.
double y12_lower(const Observables& obs, const IntensitySet& intensities,
                 double y0_l, double y1_l);

/// Effective-gain lower bound:
/// [(y12_l / 2) mu^2 + (y1_l mu - y1_l mu^2 / 2)] e^(-mu), clamped at 0.
/// The y1_l term changes sign at mu = 2.
double q12_lower(double y12_l, double y1_l, double mu);

/// Upper bound on the lumped single+double-photon error rate:
/// (E_mu Q_mu - e0 y0_l e^(-mu)) / q12_l, capped at 1/2.  The background
/// error rate e0 is taken from the channel parameters.
/// Throws std::domain_error when q12_l <= 0.
double eff_error_upper(const Observables& obs, const IntensitySet& intensities,
                       double y0_l, double q12_l, double e0 = 0.5);

/// Runs the combined estimation chain (vacuum and single-photon lower
/// bounds feed the joint bound) and fills every field of CombinedBounds.
CombinedBounds estimate_combined(const Observables& obs,
                                 const IntensitySet& intensities,
                                 double e0 = 0.5);

}  // namespace decoy_lm05
