#include "decoy_lm05/key_rates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace decoy_lm05 {

double binary_entropy(double e) {
  if (!(e >= 0.0 && e <= 1.0)) {
    throw std::domain_error("binary_entropy: argument outside [0,1]");
  }
  if (e == 0.0 || e == 1.0) {
    return 0.0;
  }
  return -e * std::log2(e) - (1.0 - e) * std::log2(1.0 - e);
}

double tau(double e) {
  if (!(e >= 0.0 && e <= 1.0)) {
    throw std::domain_error("tau: argument outside [0,1]");
  }
  if (e >= 0.5) {
    return 1.0;
  }
  return std::log2(1.0 + 4.0 * e - 4.0 * e * e);
}

double rate_infinite(const ChannelParams& params, double mu, double f_ec) {
  const GainQber sig = total_gain_and_qber(params, mu);
  double rate = -sig.gain * f_ec * binary_entropy(sig.qber);
  for (int i = 1; i <= 2; ++i) {
    rate += gain_i(params, mu, i) * (1.0 - tau(error_i(params, i)));
  }
  return rate;
}

double rate_finite_a(const Observables& obs, const IntensitySet& intensities,
                     Y1UpperMode mode, const ChannelParams& params,
                     double f_ec) {
  const FiniteBounds b = estimate_finite(obs, intensities, mode, params);
  double rate = -obs.q_mu * f_ec * binary_entropy(obs.e_mu);
  if (b.q1_l > 0.0) {
    rate += b.q1_l * (1.0 - tau(b.e1_u));
  }
  if (b.q2_l > 0.0) {
    rate += b.q2_l * (1.0 - tau(b.e2_u));
  }
  return rate;
}

double rate_finite_b(const Observables& obs, const IntensitySet& intensities,
                     double e0, double f_ec) {
  const CombinedBounds b = estimate_combined(obs, intensities, e0);
  double rate = -obs.q_mu * f_ec * binary_entropy(obs.e_mu);
  if (b.q12_l > 0.0) {
    rate += b.q12_l * (1.0 - tau(b.eff_err_u));
  }
  return rate;
}

double rate_nondecoy_lm05(const ChannelParams& params, double mu,
                          double f_ec) {
  const GainQber sig = total_gain_and_qber(params, mu);
  // Probability a pulse carries three or more photons (tagged insecure).
  const double p_ge3 = 1.0 - std::exp(-mu) * (1.0 + mu + mu * mu / 2.0);
  const double beta = std::max(0.0, (sig.gain - p_ge3) / sig.gain);
  double rate = -f_ec * binary_entropy(sig.qber);
  if (beta > 0.0) {
    // The untagged fraction carries all observed errors in the worst case;
    // tau saturates once the implied error rate reaches 1/2.
    rate += beta * (1.0 - tau(std::min(sig.qber / beta, 1.0)));
  }
  return sig.gain * rate;
}

double rate_bb84_infinite(const ChannelParams& params, double mu,
                          double f_ec) {
  // One-way protocol: photons see the fiber once, so feeding half the
  // length through the two-way transmittance 10^(-alpha*2l/10) yields the
  // one-way loss 10^(-alpha*l/10).
  ChannelParams one_way = params;
  one_way.distance_km = params.distance_km / 2.0;
  const double q_sift = 0.5;
  const GainQber sig = total_gain_and_qber(one_way, mu);
  const double q1 = gain_i(one_way, mu, 1);
  const double e1 = error_i(one_way, 1);
  return q_sift * (-sig.gain * f_ec * binary_entropy(sig.qber) +
                   q1 * (1.0 - binary_entropy(e1)));
}

double rate_for(RateFormula formula, const ChannelParams& params,
                const IntensitySet& intensities, double mu, double f_ec) {
  switch (formula) {
    case RateFormula::Infinite:
      return rate_infinite(params, mu, f_ec);
    case RateFormula::NonDecoy:
      return rate_nondecoy_lm05(params, mu, f_ec);
    case RateFormula::Bb84:
      return rate_bb84_infinite(params, mu, f_ec);
    case RateFormula::FiniteAInfinite:
    case RateFormula::FiniteAGenuine:
    case RateFormula::FiniteB: {
      IntensitySet set = intensities;
      set.mu = mu;
      const Observables obs = observe(params, set);
      if (formula == RateFormula::FiniteB) {
        return rate_finite_b(obs, set, params.e0, f_ec);
      }
      const Y1UpperMode mode = formula == RateFormula::FiniteAInfinite
                                   ? Y1UpperMode::Infinite
                                   : Y1UpperMode::Genuine;
      return rate_finite_a(obs, set, mode, params, f_ec);
    }
  }
  throw std::invalid_argument("rate_for: unknown formula");
}

}  // namespace decoy_lm05
