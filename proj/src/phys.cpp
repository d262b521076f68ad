#include "cogmet/phys.hpp"

#include <cmath>
#include <numbers>

#include "cogmet/error.hpp"

namespace cogmet::phys {

namespace {

void require_nonnegative(double v, const char* field) {
  if (!(v >= 0.0)) {
    throw MathDomainError("DomainError",
                          std::string(field) + " must be >= 0");
  }
}

} // namespace

double max_ops_per_sec(const System& sys) {
  require_nonnegative(sys.energy_j, "energy_j");
  return 2.0 * sys.energy_j / (std::numbers::pi * Constants::hbar);
}

double max_bits(const System& sys) {
  require_nonnegative(sys.entropy_jk, "entropy_jk");
  return sys.entropy_jk / (Constants::k_boltzmann * std::numbers::ln2);
}

double max_io_rate(const System& sys) {
  require_nonnegative(sys.entropy_jk, "entropy_jk");
  if (!(sys.radius_m > 0.0)) {
    throw MathDomainError("DomainError", "radius_m must be > 0");
  }
  return Constants::c * sys.entropy_jk /
         (Constants::k_boltzmann * sys.radius_m);
}

double mass_energy(double mass_kg) {
  require_nonnegative(mass_kg, "mass_kg");
  return mass_kg * Constants::c * Constants::c;
}

} // namespace cogmet::phys
