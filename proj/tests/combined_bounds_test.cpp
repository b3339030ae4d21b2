#include "decoy_lm05/combined_bounds.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "decoy_lm05/finite_bounds.hpp"
#include "decoy_lm05/key_rates.hpp"

using namespace decoy_lm05;

namespace {

ChannelParams gys(double distance_km = 0.0) {
  ChannelParams p;
  p.distance_km = distance_km;
  return p;
}

struct Draw {
  ChannelParams params;
  IntensitySet set;
};

Draw random_draw(std::mt19937_64& rng) {
  auto unif = [&](double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  Draw d;
  d.params.alpha = unif(0.15, 0.3);
  d.params.distance_km = unif(0.0, 60.0);
  d.params.eta_ab = unif(0.02, 0.1);
  d.params.y0 = unif(1e-7, 1e-5);
  d.params.e_det = unif(0.01, 0.05);
  d.set.nu2 = unif(0.0, 0.08);
  d.set.nu1 = d.set.nu2 + unif(0.01, 0.07);
  d.set.mu = unif(std::max(0.2, 1.3 * (d.set.nu1 + d.set.nu2) + 0.05), 1.0);
  return d;
}

}  // namespace

TEST_CASE("y12_lower: bounded by the true combined yield") {
  IntensitySet set{0.35, 0.05, 0.0};
  ChannelParams p = gys(20.0);
  const Observables obs = observe(p, set);
  const double y0_l = y0_lower(obs, set);
  const double y1_l = y1_lower(obs, set, y0_l);
  const double y12_l = y12_lower(obs, set, y0_l, y1_l);
  CHECK(y12_l > 0.0);
  CHECK(y12_l <= yield_i(p, 1) + yield_i(p, 2));
}

TEST_CASE("y12_lower: bound holds across the operating envelope") {
  std::mt19937_64 rng(2001);
  for (int trial = 0; trial < 10000; ++trial) {
    const Draw d = random_draw(rng);
    const Observables obs = observe(d.params, d.set);
    const double y0_l = y0_lower(obs, d.set);
    const double y1_l = y1_lower(obs, d.set, y0_l);
    CHECK(y12_lower(obs, d.set, y0_l, y1_l) <=
          yield_i(d.params, 1) + yield_i(d.params, 2));
  }
}

TEST_CASE("y12_lower: nothing measured, nothing estimated") {
  IntensitySet set{0.35, 0.05, 0.0};
  CHECK(y12_lower(Observables{}, set, 0.0, 0.0) == 0.0);
}

TEST_CASE("q12_lower: substituting the true yields reproduces the true gain") {
  ChannelParams p = gys(20.0);
  for (double mu : {0.1, 0.35, 0.45, 1.0, 1.9}) {
    const double y1 = yield_i(p, 1);
    const double y2 = yield_i(p, 2);
    const double expected = gain_i(p, mu, 1) + gain_i(p, mu, 2);
    const double actual = q12_lower(y1 + y2, y1, mu);
    CHECK(actual == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("q12_lower: vanishes with the source") {
  CHECK(q12_lower(0.1, 0.05, 1e-12) <= 1e-12);
}

TEST_CASE("q12_lower: bounded by the true combined gain across draws") {
  std::mt19937_64 rng(2002);
  for (int trial = 0; trial < 10000; ++trial) {
    const Draw d = random_draw(rng);
    const Observables obs = observe(d.params, d.set);
    const CombinedBounds b = estimate_combined(obs, d.set, d.params.e0);
    const double q12_true =
        gain_i(d.params, d.set.mu, 1) + gain_i(d.params, d.set.mu, 2);
    CHECK(b.q12_l <= q12_true);
  }
}

TEST_CASE("eff_error_upper: dominates the true lumped error across draws") {
  std::mt19937_64 rng(2003);
  for (int trial = 0; trial < 10000; ++trial) {
    const Draw d = random_draw(rng);
    const Observables obs = observe(d.params, d.set);
    const CombinedBounds b = estimate_combined(obs, d.set, d.params.e0);
    if (!b.eff_defined) {
      continue;
    }
    const double q1 = gain_i(d.params, d.set.mu, 1);
    const double q2 = gain_i(d.params, d.set.mu, 2);
    const double true_eff = (error_i(d.params, 1) * q1 +
                             error_i(d.params, 2) * q2) /
                            (q1 + q2);
    CHECK(b.eff_err_u >= true_eff);
  }
}

TEST_CASE("eff_error_upper: error-free channel gives a vanishing bound") {
  ChannelParams p = gys(10.0);
  p.y0 = 0.0;
  p.e_det = 0.0;
  IntensitySet set{0.35, 0.05, 0.0};
  const Observables obs = observe(p, set);
  const CombinedBounds b = estimate_combined(obs, set, p.e0);
  REQUIRE(b.eff_defined);
  CHECK(b.eff_err_u <= 1e-15);
}

TEST_CASE("eff_error_upper: undefined without a positive gain bound") {
  IntensitySet set{0.35, 0.05, 0.0};
  CHECK_THROWS_AS(eff_error_upper(Observables{}, set, 0.0, 0.0),
                  std::domain_error);
}

TEST_CASE("estimate_combined: blocked channel clamps to zero") {
  IntensitySet set{0.35, 0.05, 0.0};
  const CombinedBounds b = estimate_combined(Observables{}, set);
  CHECK(b.y12_l == 0.0);
  CHECK(b.q12_l == 0.0);
  CHECK_FALSE(b.eff_defined);
  CHECK(b.eff_err_u == 0.5);
}

TEST_CASE("coarse decoy-difference inequality") {
  // Y1 (nu1 - nu2) + Y2 (nu1^2 - nu2^2)/2 < (Y1 + Y2)(nu1 - nu2) whenever
  // nu1 < 1: the quadratic decoy difference is smaller than the linear one.
  std::mt19937_64 rng(2004);
  auto unif = [&](double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  for (int trial = 0; trial < 10000; ++trial) {
    ChannelParams p = gys(unif(0.0, 60.0));
    p.eta_ab = unif(0.02, 0.1);
    const double nu2 = unif(0.0, 0.3);
    const double nu1 = nu2 + unif(1e-4, 0.99 - 2.0 * nu2);
    const double y1 = yield_i(p, 1);
    const double y2 = yield_i(p, 2);
    const double lhs = y1 * (nu1 - nu2) + y2 * (nu1 * nu1 - nu2 * nu2) / 2.0;
    const double rhs = (y1 + y2) * (nu1 - nu2);
    CHECK(lhs < rhs);
  }
}

TEST_CASE("lumped estimate stays below the per-photon estimate") {
  // Observed ordering on the standard channel, equal signal intensity; the
  // lumped bound discards which photon number caused each detection, so it
  // keys the privacy amplification off the worst case.  Reported, not
  // required: it is an empirical observation, not a theorem.
  IntensitySet set{0.45, 0.05, 0.0};
  for (double l : {0.0, 10.0, 20.0, 30.0, 40.0, 50.0, 60.0}) {
    ChannelParams p = gys(l);
    const Observables obs = observe(p, set);
    const double rate_lumped = rate_finite_b(obs, set, p.e0);
    const double rate_per_photon =
        rate_finite_a(obs, set, Y1UpperMode::Infinite, p);
    WARN_LE(rate_lumped, rate_per_photon);
  }
}
