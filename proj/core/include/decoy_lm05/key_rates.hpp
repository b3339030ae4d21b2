#pragma once

#include "decoy_lm05/channel.hpp"
#include "decoy_lm05/combined_bounds.hpp"
#include "decoy_lm05/finite_bounds.hpp"

namespace decoy_lm05 {

/// Default error-correction inefficiency factor.
inline constexpr double kDefaultFEc = 1.22;

/// One sample of a rate-vs-distance curve.
struct RatePoint {
  double distance_km = 0.0;
  double mu_used = 0.0;
  double rate = 0.0;  ///< secure bits per signal pulse; may be <= 0
};

/// Which key-rate formula to evaluate.  FiniteAInfinite / FiniteAGenuine are
/// the two-decoy per-photon-number estimate with the respective Y1 upper
/// bound mode; FiniteB is the lumped single+double-photon estimate; NonDecoy
/// concedes every >= 3-photon pulse to the adversary; Bb84 is the standard
/// one-way comparison protocol with infinite-decoy knowledge.
enum class RateFormula {
  Infinite,
  FiniteAInfinite,
  FiniteAGenuine,
  FiniteB,
  NonDecoy,
  Bb84,
};

/// Binary entropy H(e) = -e log2 e - (1-e) log2(1-e); H(0) = H(1) = 0.
/// Throws std::domain_error outside [0,1].
double binary_entropy(double e);

/// Privacy-amplification discard fraction under individual attacks:
/// tau(e) = log2(1 + 4e - 4e^2) for e < 1/2, else 1.
/// Throws std::domain_error outside [0,1].
double tau(double e);

/// Infinite-decoy rate: perfect knowledge of the per-photon yields and
/// errors.  R = -Q_mu f H(E_mu) + sum_{i=1,2} Q_i [1 - tau(e_i)].
double rate_infinite(const ChannelParams& params, double mu,
                     double f_ec = kDefaultFEc);

/// Two-decoy rate, per-photon-number estimates:
/// R = -Q_mu f H(E_mu) + sum_{i=1,2} Qi_l [1 - tau(ei_u)].
/// A photon-number term with a zero gain bound contributes nothing.
double rate_finite_a(const Observables& obs, const IntensitySet& intensities,
                     Y1UpperMode mode, const ChannelParams& params,
                     double f_ec = kDefaultFEc);

/// Two-decoy rate, lumped single+double-photon estimate:
/// R = -Q_mu f H(E_mu) + q12_l [1 - tau(eff_err_u)].
double rate_finite_b(const Observables& obs, const IntensitySet& intensities,
                     double e0 = 0.5, double f_ec = kDefaultFEc);

/// Non-decoy rate under worst-case multiphoton tagging: every pulse of three
/// or more photons is conceded.  With beta = max{0, (Q_mu - p_{>=3}) / Q_mu}:
/// R = Q_mu [-f H(E_mu) + beta (1 - tau(E_mu / beta))], tau saturating at 1.
double rate_nondecoy_lm05(const ChannelParams& params, double mu,
                          double f_ec = kDefaultFEc);

/// Infinite-decoy BB84 over the same fiber: one-way transmittance
/// t = 10^(-alpha l / 10), sifting factor q = 1/2:
/// R = q {-Q_mu f H(E_mu) + Q_1 [1 - H(e_1)]}.
double rate_bb84_infinite(const ChannelParams& params, double mu,
                          double f_ec = kDefaultFEc);

/// Evaluates any formula at one signal intensity.  The decoy intensities of
/// `intensities` are used (with the given mu) for the finite formulas and
/// ignored by the others.
double rate_for(RateFormula formula, const ChannelParams& params,
                const IntensitySet& intensities, double mu,
                double f_ec = kDefaultFEc);

}  // namespace decoy_lm05
