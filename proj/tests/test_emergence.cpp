#include <cmath>
#include <vector>

#include "doctest.h"

#include "cogmet/emergence.hpp"
#include "cogmet/error.hpp"
#include "cogmet/rng.hpp"

using namespace cogmet;
using namespace cogmet::emergence;

TEST_SUITE("emergence") {

TEST_CASE("stonier information") {
  CHECK(stonier_information({5.0, 2.0, 0.0}) == 5.0);
  CHECK(stonier_information({1.0, 1.0, 1.0}) ==
        doctest::Approx(0.36787944117144233).epsilon(1e-12));
  CHECK(stonier_information({1.0, 1.0, 2.0}) <
        stonier_information({1.0, 1.0, 1.0}));
  CHECK_THROWS_AS(stonier_information({1.0, 0.0, 1.0}), MathDomainError);
  CHECK_THROWS_AS(stonier_information({-1.0, 1.0, 1.0}), MathDomainError);
}

TEST_CASE("stonier log-linearity: ln I is affine in S with slope -1/K") {
  // Least-squares fit over 100 points; the fit is the oracle.
  const double k = 3.7;
  const double i0 = 42.0;
  const int n = 100;
  double sum_s = 0.0, sum_y = 0.0, sum_ss = 0.0, sum_sy = 0.0;
  std::vector<double> ss(n), ys(n);
  for (int i = 0; i < n; ++i) {
    const double s = 0.1 * i;
    const double y = std::log(stonier_information({i0, k, s}));
    ss[i] = s;
    ys[i] = y;
    sum_s += s;
    sum_y += y;
    sum_ss += s * s;
    sum_sy += s * y;
  }
  const double slope =
      (n * sum_sy - sum_s * sum_y) / (n * sum_ss - sum_s * sum_s);
  const double intercept = (sum_y - slope * sum_s) / n;
  CHECK(slope == doctest::Approx(-1.0 / k).epsilon(1e-10));
  CHECK(intercept == doctest::Approx(std::log(i0)).epsilon(1e-10));
  for (int i = 0; i < n; ++i) {
    CHECK(std::abs(ys[i] - (intercept + slope * ss[i])) < 1e-10);
  }
}

TEST_CASE("emergent capacity worked values") {
  CHECK(emergent_capacity({100.0, 1.0}) == 100.0);
  CHECK(emergent_capacity({100.0, 0.5}) ==
        doctest::Approx(164.87212707001282).epsilon(1e-12));
  CHECK(emergent_capacity({1.0, 0.36787944117144233}) ==
        doctest::Approx(1.7001863206231418).epsilon(1e-12));
}

TEST_CASE("emergent capacity domain") {
  CHECK_THROWS_AS(emergent_capacity({1.0, 0.0}), MathDomainError);
  CHECK_THROWS_AS(emergent_capacity({1.0, 1.5}), MathDomainError);
  CHECK_THROWS_AS(emergent_capacity({0.0, 0.5}), MathDomainError);
  CHECK_THROWS_AS(emergent_capacity({1.0, -0.2}), MathDomainError);
}

TEST_CASE("capacity >= m with equality only at eta = 1") {
  Splitmix64 g(1234);
  for (int rep = 0; rep < 200; ++rep) {
    const double m = 0.5 + g.unit_real() * 100.0;
    const double eta = g.positive_unit_real();
    const double cap = emergent_capacity({m, eta});
    CHECK(cap >= m);
    if (eta < 1.0) CHECK(cap > m);
  }
  CHECK(emergent_capacity({7.0, 1.0}) == 7.0);
}

TEST_CASE("capacity tends to m as eta -> 0+") {
  const double cap = emergent_capacity({3.0, 1e-9});
  CHECK(std::abs(cap - 3.0) / 3.0 <= 1e-6);
}

TEST_CASE("capacity peak at the analytic maximizer") {
  const CapacityPeak peak = capacity_peak();
  CHECK(std::abs(peak.eta_star - 0.36787944117144233) <= 1e-9);
  CHECK(peak.gain_star ==
        doctest::Approx(1.7001863206231418).epsilon(1e-9));
  // Separability: capacity(m, eta*) = m * gain* for any m.
  for (double m : {0.5, 1.0, 100.0, 4096.0}) {
    CHECK(emergent_capacity({m, peak.eta_star}) ==
          doctest::Approx(m * peak.gain_star).epsilon(1e-12));
  }
}

TEST_CASE("capacity gain is unimodal around the peak") {
  const double eta_star = capacity_peak().eta_star;
  const int n = 10000;
  double prev = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double eta = static_cast<double>(i) / n;
    const double value = emergent_capacity({1.0, eta});
    if (i > 1) {
      if (eta <= eta_star) {
        CHECK(value > prev);
      } else if ((static_cast<double>(i) - 1.0) / n >= eta_star) {
        CHECK(value < prev);
      }
    }
    prev = value;
  }
}

} // TEST_SUITE
