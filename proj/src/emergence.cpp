#include "cogmet/emergence.hpp"

#include <cmath>
#include <numbers>

#include "cogmet/error.hpp"

namespace cogmet::emergence {

namespace {

// Exponent of the capacity gain: f(η) = η·log2(1/η) on (0, 1].
double gain_exponent(double eta) { return eta * std::log2(1.0 / eta); }

// f'(η) = (-ln η - 1)/ln 2; positive left of the peak, negative right of it.
double gain_exponent_slope(double eta) {
  return (-std::log(eta) - 1.0) / std::numbers::ln2;
}

} // namespace

double stonier_information(const StonierParams& p) {
  if (!(p.i0 >= 0.0))
    throw MathDomainError("DomainError", "stonier I0 must be >= 0");
  if (!(p.k > 0.0))
    throw MathDomainError("DomainError", "stonier K must be > 0");
  if (!(p.s >= 0.0))
    throw MathDomainError("DomainError", "stonier S must be >= 0");
  return p.i0 * std::exp(-p.s / p.k);
}

double emergent_capacity(const EmergenceInput& e) {
  if (!(e.size_m > 0.0))
    throw MathDomainError("DomainError", "system size m must be > 0");
  if (!(e.eta > 0.0 && e.eta <= 1.0))
    throw MathDomainError("DomainError", "eta must lie in (0, 1]");
  return e.size_m * std::exp(gain_exponent(e.eta));
}

CapacityPeak capacity_peak() {
  // Coarse scan brackets the maximum; the exponent is strictly unimodal.
  constexpr int kGrid = 4096;
  int best = 1;
  double best_f = -1.0;
  for (int i = 1; i < kGrid; ++i) {
    const double f = gain_exponent(static_cast<double>(i) / kGrid);
    if (f > best_f) {
      best_f = f;
      best = i;
    }
  }
  double lo = static_cast<double>(best - 1) / kGrid;
  double hi = static_cast<double>(best + 1) / kGrid;
  // The slope changes sign exactly once inside the bracket; bisect it.
  for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (gain_exponent_slope(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double eta = 0.5 * (lo + hi);
  return {eta, std::exp(gain_exponent(eta))};
}

} // namespace cogmet::emergence
