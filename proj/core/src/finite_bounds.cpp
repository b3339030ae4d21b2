#include "decoy_lm05/finite_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace decoy_lm05 {

namespace {

double clamp_yield(double y) { return std::clamp(y, 0.0, 1.0); }
double clamp_error(double e) { return std::clamp(e, 0.0, 0.5); }

}  // namespace

double y0_lower(const Observables& obs, const IntensitySet& intensities) {
  const double nu1 = intensities.nu1;
  const double nu2 = intensities.nu2;
  if (!(nu1 > nu2)) {
    throw std::invalid_argument("y0_lower: require nu1 > nu2");
  }
  const double raw =
      (nu1 * obs.q_nu2 * std::exp(nu2) - nu2 * obs.q_nu1 * std::exp(nu1)) /
      (nu1 - nu2);
  return clamp_yield(raw);
}

double y1_lower(const Observables& obs, const IntensitySet& intensities,
                double y0_l) {
  const double mu = intensities.mu;
  const double nu1 = intensities.nu1;
  const double nu2 = intensities.nu2;
  const double denom = mu * (nu1 - nu2) - nu1 * nu1 + nu2 * nu2;
  if (!(denom > 0.0)) {
    throw std::invalid_argument(
        "y1_lower: require mu(nu1-nu2) - nu1^2 + nu2^2 > 0");
  }
  const double bracket = obs.q_nu1 * std::exp(nu1) - obs.q_nu2 * std::exp(nu2) -
                         (nu1 * nu1 - nu2 * nu2) / (mu * mu) *
                             (obs.q_mu * std::exp(mu) - y0_l);
  return clamp_yield(mu / denom * bracket);
}

double y1_upper(const Observables& obs, const IntensitySet& intensities,
                Y1UpperMode mode, const ChannelParams& params) {
  if (mode == Y1UpperMode::Infinite) {
    return yield_i(params, 1);
  }
  const double nu1 = intensities.nu1;
  const double nu2 = intensities.nu2;
  if (!(nu1 > nu2)) {
    throw std::invalid_argument("y1_upper: require nu1 > nu2");
  }
  const double raw =
      (obs.q_nu1 * std::exp(nu1) - obs.q_nu2 * std::exp(nu2)) / (nu1 - nu2);
  return clamp_yield(raw);
}

double y2_lower(const Observables& obs, const IntensitySet& intensities,
                double y0_l, double y1_u) {
  const double mu = intensities.mu;
  const double nu1 = intensities.nu1;
  const double nu2 = intensities.nu2;
  const double nu1_3 = nu1 * nu1 * nu1;
  const double nu2_3 = nu2 * nu2 * nu2;
  const double denom = (nu1 * nu1 - nu2 * nu2) * mu - nu1_3 + nu2_3;
  if (!(denom > 0.0)) {
    throw std::invalid_argument(
        "y2_lower: require (nu1^2-nu2^2)mu - nu1^3 + nu2^3 > 0");
  }
  const double y1_term = y1_u * (mu * mu * (nu1 - nu2) - (nu1_3 - nu2_3)) / (mu * mu);
  const double y0_term =
      (nu1_3 - nu2_3) / (mu * mu * mu) * (obs.q_mu * std::exp(mu) - y0_l);
  const double bracket = obs.q_nu1 * std::exp(nu1) - obs.q_nu2 * std::exp(nu2) -
                         (y1_term + y0_term);
  return clamp_yield(2.0 * mu * bracket / denom);
}

double e1_upper(const Observables& obs, const IntensitySet& intensities,
                double y1_l) {
  if (!(y1_l > 0.0)) {
    throw std::domain_error("e1_upper: undefined for y1_l <= 0");
  }
  const double mu = intensities.mu;
  const double nu1 = intensities.nu1;
  const double nu2 = intensities.nu2;
  const double d1 = obs.e_nu1 * obs.q_nu1 * std::exp(nu1) -
                    obs.e_nu2 * obs.q_nu2 * std::exp(nu2);
  const double d2 = obs.e_mu * obs.q_mu * std::exp(mu) -
                    obs.e_nu2 * obs.q_nu2 * std::exp(nu2);
  const double num =
      d1 * (mu * mu - nu2 * nu2) - d2 * (nu1 * nu1 - nu2 * nu2);
  const double denom =
      y1_l * ((nu1 - nu2) * (mu * mu - nu2 * nu2) -
              (mu - nu2) * (nu1 * nu1 - nu2 * nu2));
  return clamp_error(num / denom);
}

double e2_upper(const Observables& obs, const IntensitySet& intensities,
                double y2_l) {
  if (!(y2_l > 0.0)) {
    throw std::domain_error("e2_upper: undefined for y2_l <= 0");
  }
  const double mu = intensities.mu;
  const double nu1 = intensities.nu1;
  const double nu2 = intensities.nu2;
  const double d1 = obs.e_nu1 * obs.q_nu1 * std::exp(nu1) -
                    obs.e_nu2 * obs.q_nu2 * std::exp(nu2);
  const double d2 = obs.e_mu * obs.q_mu * std::exp(mu) -
                    obs.e_nu2 * obs.q_nu2 * std::exp(nu2);
  // Numerator and denominator are both negative on honest channels (the
  // denominator bracket factors as (nu1-nu2)(mu-nu2)(nu1-mu)/2 < 0).
  const double num = d1 * (mu - nu2) - d2 * (nu1 - nu2);
  const double denom = y2_l * ((nu1 * nu1 - nu2 * nu2) / 2.0 * (mu - nu2) -
                               (mu * mu - nu2 * nu2) / 2.0 * (nu1 - nu2));
  return clamp_error(num / denom);
}

FiniteBounds estimate_finite(const Observables& obs,
                             const IntensitySet& intensities, Y1UpperMode mode,
                             const ChannelParams& params) {
  intensities.validate();
  FiniteBounds b;
  b.y0_l = y0_lower(obs, intensities);
  b.y1_u = y1_upper(obs, intensities, mode, params);
  // A lower bound can never meaningfully exceed the upper bound; tie them.
  b.y1_l = std::min(y1_lower(obs, intensities, b.y0_l), b.y1_u);
  b.y2_l = y2_lower(obs, intensities, b.y0_l, b.y1_u);
  if (b.y1_l > 0.0) {
    b.e1_u = e1_upper(obs, intensities, b.y1_l);
    b.e1_defined = true;
  }
  if (b.y2_l > 0.0) {
    b.e2_u = e2_upper(obs, intensities, b.y2_l);
    b.e2_defined = true;
  }
  const double mu = intensities.mu;
  b.q1_l = b.y1_l * std::exp(-mu) * mu;
  b.q2_l = b.y2_l * std::exp(-mu) * mu * mu / 2.0;
  return b;
}

}  // namespace decoy_lm05
