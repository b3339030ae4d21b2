#include "decoy_lm05/sampler.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "decoy_lm05/combined_bounds.hpp"
#include "decoy_lm05/finite_bounds.hpp"

using namespace decoy_lm05;

namespace {

ChannelParams gys(double distance_km = 0.0) {
  ChannelParams p;
  p.distance_km = distance_km;
  return p;
}

}  // namespace

TEST_CASE("sample_observables: identical seeds give identical sessions") {
  IntensitySet set{0.45, 0.05, 0.0};
  SampleSpec spec{50000, 42};
  const SampleResult a = sample_observables(gys(10.0), set, spec);
  const SampleResult b = sample_observables(gys(10.0), set, spec);
  CHECK(a.obs.q_mu == b.obs.q_mu);
  CHECK(a.obs.e_mu == b.obs.e_mu);
  CHECK(a.obs.q_nu1 == b.obs.q_nu1);
  CHECK(a.obs.e_nu1 == b.obs.e_nu1);
  CHECK(a.obs.q_nu2 == b.obs.q_nu2);
  CHECK(a.obs.e_nu2 == b.obs.e_nu2);
  CHECK(a.no_detections == b.no_detections);
}

TEST_CASE("sample_observables: different seeds give different sessions") {
  IntensitySet set{0.45, 0.05, 0.0};
  const SampleResult a = sample_observables(gys(10.0), set, {100000, 1});
  const SampleResult b = sample_observables(gys(10.0), set, {100000, 2});
  CHECK(a.obs.q_mu != b.obs.q_mu);
}

TEST_CASE("sample_observables: error-free channel never records an error") {
  ChannelParams p;
  p.alpha = 1e-9;
  p.eta_ab = 1.0;
  p.y0 = 0.0;
  p.e_det = 0.0;
  IntensitySet set{1.0, 0.05, 0.0};
  const SampleResult r = sample_observables(p, set, {10000, 7});
  CHECK(r.obs.e_mu == 0.0);
  CHECK(r.obs.e_nu1 == 0.0);
  CHECK(r.obs.e_nu2 == 0.0);
  // Perfect detector: every non-vacuum pulse clicks...
  CHECK_FALSE(r.no_detections[0]);
  CHECK_FALSE(r.no_detections[1]);
  // ...but the vacuum decoy never does without dark counts.
  CHECK(r.no_detections[2]);
  CHECK(r.obs.q_nu2 == 0.0);
}

TEST_CASE("sample_observables: agrees with the closed form at large N") {
  ChannelParams p = gys(10.0);
  IntensitySet set{0.5, 0.05, 0.0};
  const SampleSpec spec{1000000, 7};
  const SampleResult r = sample_observables(p, set, spec);
  const GainQber expected = total_gain_and_qber(p, set.mu);
  // Detections are binomial: allow five standard errors.
  const double sigma = std::sqrt(expected.gain * (1.0 - expected.gain) /
                                 static_cast<double>(spec.pulses));
  CHECK(std::abs(r.obs.q_mu - expected.gain) < 5.0 * sigma);
}

TEST_CASE("sample_observables: estimators accept finite-session data") {
  // Fluctuating observables may break the bound orderings; the estimators
  // must report that through their values and flags, never by throwing.
  IntensitySet set{0.45, 0.05, 0.0};
  for (std::uint64_t seed : {11u, 12u, 13u, 14u, 15u}) {
    const SampleResult r =
        sample_observables(gys(35.0), set, {10000, seed});
    ChannelParams p = gys(35.0);
    CHECK_NOTHROW(estimate_finite(r.obs, set, Y1UpperMode::Genuine, p));
    CHECK_NOTHROW(estimate_combined(r.obs, set, p.e0));
  }
}

TEST_CASE("sample_observables: session size is validated") {
  IntensitySet set{0.45, 0.05, 0.0};
  const SampleSpec empty{0, 1};
  CHECK_THROWS_AS(sample_observables(gys(), set, empty),
                  std::invalid_argument);
}

TEST_CASE("derive_seed: deterministic and index-sensitive") {
  CHECK(derive_seed(123, 0) == derive_seed(123, 0));
  CHECK(derive_seed(123, 0) != derive_seed(123, 1));
  CHECK(derive_seed(123, 0) != derive_seed(124, 0));
}
