#include "decoy_lm05/sampler.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace decoy_lm05 {

void SampleSpec::validate() const {
  if (pulses < 1) {
    throw std::invalid_argument("SampleSpec: pulses must be >= 1");
  }
}

namespace {

// Uniform in [0,1) from the top 53 bits; bit-identical on every platform.
double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Knuth's Poisson sampler: multiply uniforms until the product drops below
// e^(-lambda).  Exact and portable; fast for the small intensities used
// here (lambda <= 2 costs ~1 + lambda uniforms per draw).
int poisson(std::mt19937_64& gen, double exp_neg_lambda) {
  int k = 0;
  double p = uniform01(gen);
  while (p > exp_neg_lambda) {
    ++k;
    p *= uniform01(gen);
  }
  return k;
}

struct IntensityTally {
  std::uint64_t detections = 0;
  std::uint64_t errors = 0;
};

IntensityTally run_intensity(const ChannelParams& params, double intensity,
                             std::uint64_t pulses, std::mt19937_64& gen) {
  const double exp_neg_lambda = std::exp(-intensity);
  // Yield / error tables by photon number, grown on demand.  Poisson(<=2)
  // essentially never exceeds a few tens of photons.
  std::vector<double> yields{yield_i(params, 0)};
  std::vector<double> errors{params.e0};
  const auto grow_tables = [&](int n) {
    while (static_cast<int>(yields.size()) <= n) {
      const int i = static_cast<int>(yields.size());
      yields.push_back(yield_i(params, i));
      const double y = yields.back();
      errors.push_back(y > 0.0 ? error_i(params, i) : 0.0);
    }
  };

  IntensityTally tally;
  for (std::uint64_t pulse = 0; pulse < pulses; ++pulse) {
    const int n = poisson(gen, exp_neg_lambda);
    grow_tables(n);
    if (uniform01(gen) < yields[n]) {
      ++tally.detections;
      if (uniform01(gen) < errors[n]) {
        ++tally.errors;
      }
    }
  }
  return tally;
}

}  // namespace

SampleResult sample_observables(const ChannelParams& params,
                                const IntensitySet& intensities,
                                const SampleSpec& spec) {
  params.validate();
  intensities.validate();
  spec.validate();

  std::mt19937_64 gen(spec.seed);
  SampleResult result;
  const double levels[3] = {intensities.mu, intensities.nu1, intensities.nu2};
  double* gains[3] = {&result.obs.q_mu, &result.obs.q_nu1, &result.obs.q_nu2};
  double* qbers[3] = {&result.obs.e_mu, &result.obs.e_nu1, &result.obs.e_nu2};
  for (int idx = 0; idx < 3; ++idx) {
    const IntensityTally tally =
        run_intensity(params, levels[idx], spec.pulses, gen);
    *gains[idx] =
        static_cast<double>(tally.detections) / static_cast<double>(spec.pulses);
    if (tally.detections > 0) {
      *qbers[idx] = static_cast<double>(tally.errors) /
                    static_cast<double>(tally.detections);
    } else {
      *qbers[idx] = 0.0;
      result.no_detections[idx] = true;
    }
  }
  return result;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 output function on a golden-ratio-spaced stream.
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace decoy_lm05
