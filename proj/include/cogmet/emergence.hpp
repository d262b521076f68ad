#pragma once

namespace cogmet::emergence {

// Stonier's exponential information measure and the emergent-capacity
// measure I = m·e^(η·log2(1/η)), with peak analysis.

struct StonierParams {
  double i0 = 0.0; // information at zero entropy, >= 0
  double k = 1.0;  // decay scale, > 0 (free parameter, not a physical constant)
  double s = 0.0;  // entropy input, >= 0
};

struct EmergenceInput {
  double size_m = 1.0; // system size, > 0
  double eta = 1.0;    // normalized entropy, in (0, 1]
};

struct CapacityPeak {
  double eta_star = 0.0;  // maximizer of the capacity gain on (0, 1)
  double gain_star = 0.0; // e^(η*·log2(1/η*))
};

// I = I0·e^(-S/K). Strictly decreasing in S.
double stonier_information(const StonierParams& p);

// I = m·e^(η·log2(1/η)), >= m with equality only at η = 1. η = 0 is outside
// the domain (the exponent diverges); DomainError.
double emergent_capacity(const EmergenceInput& e);

// Interior maximizer of the capacity gain: coarse bracketing scan followed
// by bisection on the exponent's derivative, refined to |η - η*| <= 1e-9.
CapacityPeak capacity_peak();

} // namespace cogmet::emergence
