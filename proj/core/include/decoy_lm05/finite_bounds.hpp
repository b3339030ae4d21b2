#pragma once

#include "decoy_lm05/channel.hpp"

namespace decoy_lm05 {

/// How to upper-bound the single-photon yield.
///
/// Genuine solves the two-decoy difference relation under the worst-case
/// assumption Y2 = 0, so it depends only on measured quantities.  Infinite
/// substitutes the honest-channel single-photon yield (no-tampering model);
/// it is provided for comparison curves and is not a measured bound.
enum class Y1UpperMode {
  Infinite,
  Genuine,
};

/// Per-photon-number estimates from two decoy intensities: lower bounds on
/// the vacuum, single- and double-photon yields, upper bounds on the
/// single- and double-photon error rates, and the derived gain lower bounds.
///
/// Yield bounds are clamped to [0,1] and error bounds to [0,1/2].  When a
/// yield lower bound is zero the matching error bound has no solution; it is
/// reported as 1/2 with its `defined` flag cleared, and the corresponding
/// key-rate contribution is zero regardless (the gain bound is also zero).
struct FiniteBounds {
  double y0_l = 0.0;
  double y1_l = 0.0;
  double y1_u = 0.0;
  double y2_l = 0.0;
  double e1_u = 0.5;
  double e2_u = 0.5;
  double q1_l = 0.0;  ///< y1_l * e^(-mu) * mu
  double q2_l = 0.0;  ///< y2_l * e^(-mu) * mu^2 / 2
  bool e1_defined = false;
  bool e2_defined = false;
};

/// Vacuum-yield lower bound from the two decoy states:
/// max{(nu1 Q_nu2 e^nu2 - nu2 Q_nu1 e^nu1) / (nu1 - nu2), 0}.
/// With a vacuum decoy (nu2 = 0) this is exactly the observed Q_nu2.
double y0_lower(const Observables& obs, const IntensitySet& intensities);

/// Single-photon-yield lower bound; consumes y0_lower's result.
double y1_lower(const Observables& obs, const IntensitySet& intensities,
                double y0_l);

/// Single-photon-yield upper bound, by mode (see Y1UpperMode).  The channel
/// parameters are consulted only in Infinite mode.
double y1_upper(const Observables& obs, const IntensitySet& intensities,
                Y1UpperMode mode, const ChannelParams& params);

/// Double-photon-yield lower bound; consumes y0_lower and y1_upper results.
double y2_lower(const Observables& obs, const IntensitySet& intensities,
                double y0_l, double y1_u);

/// Single-photon error-rate upper bound, capped at 1/2.
/// Throws std::domain_error when y1_l <= 0 (no finite bound exists; the
/// single-photon rate contribution is zero in that case anyway).
double e1_upper(const Observables& obs, const IntensitySet& intensities,
                double y1_l);

/// Double-photon error-rate upper bound, capped at 1/2.
/// Throws std::domain_error when y2_l <= 0.
double e2_upper(const Observables& obs, const IntensitySet& intensities,
                double y2_l);

/// Runs the full two-decoy estimation chain and fills every field of
/// FiniteBounds, including the gain bounds q1_l, q2_l.
FiniteBounds estimate_finite(const Observables& obs,
                             const IntensitySet& intensities, Y1UpperMode mode,
                             const ChannelParams& params);

}  // namespace decoy_lm05
