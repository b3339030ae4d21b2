#include "decoy_lm05/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace decoy_lm05 {

Optimum maximize_scalar(const std::function<double(double)>& fn, double lo,
                        double hi, double tol) {
  if (!(lo < hi)) {
    throw std::invalid_argument("maximize_scalar: empty interval");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("maximize_scalar: tolerance must be > 0");
  }

  // Coarse pre-scan: pick the best of 16 equally spaced points and bracket
  // it with its neighbors.  This keeps golden-section search on the global
  // optimum's basin if the objective is not perfectly unimodal.
  constexpr int kScanPoints = 16;
  double best_x = lo;
  double best_val = fn(lo);
  int best_k = 0;
  for (int k = 1; k < kScanPoints; ++k) {
    const double x = lo + (hi - lo) * k / (kScanPoints - 1);
    const double val = fn(x);
    if (val > best_val) {
      best_val = val;
      best_x = x;
      best_k = k;
    }
  }
  double a = lo + (hi - lo) * std::max(best_k - 1, 0) / (kScanPoints - 1);
  double b = lo + (hi - lo) * std::min(best_k + 1, kScanPoints - 1) /
                      (kScanPoints - 1);

  // Golden-section search on [a, b].
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = fn(c);
  double fd = fn(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = fn(d);
    }
  }
  Optimum result;
  result.x = (a + b) / 2.0;
  result.value = fn(result.x);
  // The pre-scan may have seen a better endpoint than the refined interior
  // point (e.g. a maximum pinned at the boundary).
  if (best_val > result.value) {
    result.x = best_x;
    result.value = best_val;
  }
  return result;
}

Optimum optimize_mu(const ChannelParams& params, const OptimizeSpec& spec) {
  params.validate();
  IntensitySet set;
  set.nu1 = spec.nu1;
  set.nu2 = spec.nu2;
  double lo = spec.mu_min;
  const bool uses_decoys = spec.formula == RateFormula::FiniteAInfinite ||
                           spec.formula == RateFormula::FiniteAGenuine ||
                           spec.formula == RateFormula::FiniteB;
  if (uses_decoys) {
    // The signal intensity must dominate the decoy intensities.
    lo = std::max(lo, spec.nu1 + spec.nu2 + 1e-6);
  }
  const auto objective = [&](double mu) {
    return rate_for(spec.formula, params, set, mu, spec.f_ec);
  };
  return maximize_scalar(objective, lo, spec.mu_max, spec.tolerance);
}

namespace {

double optimized_rate(const ChannelParams& params, const OptimizeSpec& spec,
                      double distance_km) {
  ChannelParams p = params;
  p.distance_km = distance_km;
  return optimize_mu(p, spec).value;
}

}  // namespace

double cutoff_distance(const ChannelParams& params, const OptimizeSpec& spec,
                       double l_max) {
  constexpr double kResolution = 0.1;  // km
  if (!(optimized_rate(params, spec, 0.0) > 0.0)) {
    throw std::domain_error(
        "cutoff_distance: optimized rate not positive at zero distance");
  }
  if (optimized_rate(params, spec, l_max) > 0.0) {
    return l_max;
  }
  double lo = 0.0;
  double hi = l_max;
  while (hi - lo > kResolution) {
    const double mid = (lo + hi) / 2.0;
    if (optimized_rate(params, spec, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::optional<double> crossing_distance(const ChannelParams& params,
                                        const OptimizeSpec& spec_a,
                                        const OptimizeSpec& spec_b,
                                        double l_max) {
  constexpr double kResolution = 0.1;  // km
  const auto diff = [&](double l) {
    return optimized_rate(params, spec_a, l) - optimized_rate(params, spec_b, l);
  };
  const double d0 = diff(0.0);
  const double d1 = diff(l_max);
  if (d0 == 0.0 || (d0 > 0.0) == (d1 > 0.0)) {
    return std::nullopt;  // no sign change bracketed (coinciding curves included)
  }
  double lo = 0.0;
  double hi = l_max;
  while (hi - lo > kResolution) {
    const double mid = (lo + hi) / 2.0;
    if ((diff(mid) > 0.0) == (d0 > 0.0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2.0;
}

}  // namespace decoy_lm05
