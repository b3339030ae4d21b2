#pragma once

#include <array>
#include <cstdint>

#include "decoy_lm05/channel.hpp"

namespace decoy_lm05 {

/// Monte-Carlo session size and reproducibility seed.
struct SampleSpec {
  std::uint64_t pulses = 100000;  ///< pulses per intensity
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument unless pulses >= 1.
  void validate() const;
};

/// Empirical observables from a finite session, plus a flag per intensity
/// (signal, decoy 1, decoy 2) marking that no pulse was detected — the QBER
/// is reported as 0 in that case.
struct SampleResult {
  Observables obs;
  std::array<bool, 3> no_detections = {false, false, false};
};

/// Simulates `pulses` pulses per intensity at the photon-number level: the
/// photon count is Poisson(intensity), detection happens with probability
/// Y_n and a detected pulse is erroneous with probability e_n.
///
/// Determinism contract: identical inputs give identical results on every
/// platform.  The generator is std::mt19937_64 seeded with `seed`; uniforms
/// take the top 53 bits of each output; Poisson variates use Knuth's
/// product-of-uniforms method.  All are fixed by the C++ standard or by this
/// library, with no implementation-defined distributions involved.
SampleResult sample_observables(const ChannelParams& params,
                                const IntensitySet& intensities,
                                const SampleSpec& spec);

/// Stateless mix used to derive independent sub-seeds (e.g. one per curve
/// row) from a master seed: the splitmix64 output function applied to
/// seed + (index + 1) * golden-ratio increment.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace decoy_lm05
