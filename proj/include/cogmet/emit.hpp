#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace cogmet {

// Text-mode numeric rendering shared by the CLI: fixed 6 decimals below a
// magnitude of 1e6, scientific (%.6e) at or above it, "inf" for infinities.
// Identical inputs must yield byte-identical output.
std::string format_real(double v);

// -0.0 folded to +0.0 so serialized output never prints a negative zero.
double canonical_zero(double v);

void print_kv(std::ostream& out, std::string_view key, double v);
void print_kv(std::ostream& out, std::string_view key, std::uint64_t v);
void print_kv(std::ostream& out, std::string_view key, std::string_view v);

} // namespace cogmet
