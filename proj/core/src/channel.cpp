#include "decoy_lm05/channel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace decoy_lm05 {

void ChannelParams::validate() const {
  std::ostringstream oss;
  if (!(alpha > 0.0)) {
    oss << "ChannelParams: alpha must be > 0, got " << alpha;
  } else if (!(eta_ab > 0.0 && eta_ab <= 1.0)) {
    oss << "ChannelParams: eta_ab must be in (0,1], got " << eta_ab;
  } else if (!(y0 >= 0.0 && y0 < 1.0)) {
    oss << "ChannelParams: y0 must be in [0,1), got " << y0;
  } else if (!(e_det >= 0.0 && e_det < 0.5)) {
    oss << "ChannelParams: e_det must be in [0,0.5), got " << e_det;
  } else if (!(e0 >= 0.0 && e0 <= 1.0)) {
    oss << "ChannelParams: e0 must be in [0,1], got " << e0;
  } else if (!(distance_km >= 0.0)) {
    oss << "ChannelParams: distance_km must be >= 0, got " << distance_km;
  } else {
    return;
  }
  throw std::invalid_argument(oss.str());
}

void IntensitySet::validate() const {
  std::ostringstream oss;
  if (!(nu2 >= 0.0 && nu1 > nu2 && mu > nu1)) {
    oss << "IntensitySet: require mu > nu1 > nu2 >= 0, got mu=" << mu
        << " nu1=" << nu1 << " nu2=" << nu2;
  } else if (!(nu1 + nu2 < mu)) {
    oss << "IntensitySet: require nu1 + nu2 < mu, got nu1+nu2=" << nu1 + nu2
        << " mu=" << mu;
  } else if (!(nu1 + nu2 < 1.0)) {
    oss << "IntensitySet: require nu1 + nu2 < 1, got " << nu1 + nu2;
  } else {
    return;
  }
  throw std::invalid_argument(oss.str());
}

double transmittance(const ChannelParams& params) {
  const double t = std::pow(10.0, -params.alpha * 2.0 * params.distance_km / 10.0);
  return t * params.eta_ab;
}

namespace {

// eta_i = 1 - (1 - eta)^i: probability at least one of i photons survives.
double eta_i(double eta, int i) {
  return 1.0 - std::pow(1.0 - eta, i);
}

}  // namespace

double yield_i(const ChannelParams& params, int i) {
  if (i < 0) {
    throw std::invalid_argument("yield_i: photon number must be >= 0");
  }
  const double ei = eta_i(transmittance(params), i);
  // y0 + ei - y0*ei, arranged so the result never exceeds 1.
  return params.y0 + (1.0 - params.y0) * ei;
}

double error_i(const ChannelParams& params, int i) {
  if (i < 0) {
    throw std::invalid_argument("error_i: photon number must be >= 0");
  }
  const double yi = yield_i(params, i);
  if (yi <= 0.0) {
    throw std::domain_error("error_i: degenerate channel, Y_i = 0");
  }
  const double ei = eta_i(transmittance(params), i);
  return (params.e0 * params.y0 + params.e_det * ei) / yi;
}

double gain_i(const ChannelParams& params, double intensity, int i) {
  if (i < 0) {
    throw std::invalid_argument("gain_i: photon number must be >= 0");
  }
  if (intensity < 0.0) {
    throw std::invalid_argument("gain_i: intensity must be >= 0");
  }
  // Poisson weight e^(-mu) mu^i / i!, built iteratively to avoid overflow.
  double weight = std::exp(-intensity);
  for (int k = 1; k <= i; ++k) {
    weight *= intensity / static_cast<double>(k);
  }
  return yield_i(params, i) * weight;
}

GainQber total_gain_and_qber(const ChannelParams& params, double intensity) {
  if (intensity < 0.0) {
    throw std::invalid_argument("total_gain_and_qber: intensity must be >= 0");
  }
  // s = 1 - e^(-eta*mu), evaluated stably for small arguments.
  const double s = -std::expm1(-transmittance(params) * intensity);
  const double gain = params.y0 + (1.0 - params.y0) * s;
  const double weighted_error = params.e0 * params.y0 + params.e_det * s;
  GainQber result;
  result.gain = gain;
  result.qber = gain > 0.0 ? weighted_error / gain : params.e0;
  return result;
}

Observables observe(const ChannelParams& params, const IntensitySet& intensities) {
  params.validate();
  intensities.validate();
  const GainQber sig = total_gain_and_qber(params, intensities.mu);
  const GainQber dec1 = total_gain_and_qber(params, intensities.nu1);
  const GainQber dec2 = total_gain_and_qber(params, intensities.nu2);
  Observables obs;
  obs.q_mu = sig.gain;
  obs.e_mu = sig.qber;
  obs.q_nu1 = dec1.gain;
  obs.e_nu1 = dec1.qber;
  obs.q_nu2 = dec2.gain;
  obs.e_nu2 = dec2.qber;
  return obs;
}

}  // namespace decoy_lm05
