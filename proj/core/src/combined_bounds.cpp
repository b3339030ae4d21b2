#include "decoy_lm05/combined_bounds.hpp"

#include "decoy_lm05/finite_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace decoy_lm05 {

double y12_lower(const Observables& obs, const IntensitySet& intensities,
                 double y0_l, double y1_l) {
  const double mu = intensities.mu;
  const double nu1 = intensities.nu1;
  const double nu2 = intensities.nu2;
  const double nu1_3 = nu1 * nu1 * nu1;
  const double nu2_3 = nu2 * nu2 * nu2;
  const double denom = nu1 - nu2 - (nu1_3 - nu2_3) / (2.0 * mu);
  if (!(denom > 0.0)) {
    throw std::invalid_argument(
        "y12_lower: require nu1 - nu2 - (nu1^3-nu2^3)/(2mu) > 0");
  }
  // Subtract the vacuum and the first-order single-photon slice from the
  // signal gain before dividing out the remaining decoy difference.
  const double y1_slice = y1_l * mu - y1_l * mu * mu / 2.0;
  const double bracket =
      obs.q_nu1 * std::exp(nu1) - obs.q_nu2 * std::exp(nu2) -
      (nu1_3 - nu2_3) / (mu * mu * mu) *
          (obs.q_mu * std::exp(mu) - y0_l - y1_slice);
  return std::max(bracket / denom, 0.0);
}

double q12_lower(double y12_l, double y1_l, double mu) {
  if (!(mu > 0.0)) {
    throw std::invalid_argument("q12_lower: require mu > 0");
  }
  const double raw =
      (y12_l / 2.0 * mu * mu + (y1_l * mu - y1_l * mu * mu / 2.0)) *
      std::exp(-mu);
  return std::max(raw, 0.0);
}

double eff_error_upper(const Observables& obs, const IntensitySet& intensities,
                       double y0_l, double q12_l, double e0) {
  if (!(q12_l > 0.0)) {
    throw std::domain_error("eff_error_upper: undefined for q12_l <= 0");
  }
  const double raw =
      (obs.e_mu * obs.q_mu - e0 * y0_l * std::exp(-intensities.mu)) / q12_l;
  return std::clamp(raw, 0.0, 0.5);
}

CombinedBounds estimate_combined(const Observables& obs,
                                 const IntensitySet& intensities, double e0) {
  intensities.validate();
  const double y0_l = y0_lower(obs, intensities);
  const double y1_l = y1_lower(obs, intensities, y0_l);
  CombinedBounds b;
  b.y12_l = y12_lower(obs, intensities, y0_l, y1_l);
  b.q12_l = q12_lower(b.y12_l, y1_l, intensities.mu);
  if (b.q12_l > 0.0) {
    b.eff_err_u = eff_error_upper(obs, intensities, y0_l, b.q12_l, e0);
    b.eff_defined = true;
  }
  return b;
}

}  // namespace decoy_lm05
