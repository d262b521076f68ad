#pragma once

#include <optional>

namespace cogmet::phys {

// Fundamental limits of computation for a described physical system:
// operation rate (Margolus-Levitin), memory (entropy bits), and I/O rate.

// CODATA 2018 defined values. Pinned in one place for reproducible goldens.
struct Constants {
  static constexpr double hbar = 1.054571817e-34;        // J·s
  static constexpr double k_boltzmann = 1.380649e-23;    // J/K
  static constexpr double c = 299792458.0;               // m/s
};

struct System {
  double energy_j = 0.0;   // average energy above the ground state, J
  double entropy_jk = 0.0; // thermodynamic entropy, J/K
  double radius_m = 0.0;   // system size, m
  std::optional<double> mass_kg;
};

// 2E/(πħ), operations per second. Linear in E.
double max_ops_per_sec(const System& sys);

// S/(k_B·ln 2), bits. Linear in S.
double max_bits(const System& sys);

// c·S/(k_B·R), bits per second. DomainError if R <= 0.
double max_io_rate(const System& sys);

// m·c², joules.
double mass_energy(double mass_kg);

} // namespace cogmet::phys
