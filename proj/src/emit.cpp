#include "cogmet/emit.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>

namespace cogmet {

double canonical_zero(double v) { return v == 0.0 ? 0.0 : v; }

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  v = canonical_zero(v);
  char buf[64];
  if (std::abs(v) >= 1e6) {
    std::snprintf(buf, sizeof buf, "%.6e", v);
  } else {
    std::snprintf(buf, sizeof buf, "%.6f", v);
  }
  return buf;
}

void print_kv(std::ostream& out, std::string_view key, double v) {
  out << key << '=' << format_real(v) << '\n';
}

void print_kv(std::ostream& out, std::string_view key, std::uint64_t v) {
  out << key << '=' << v << '\n';
}

void print_kv(std::ostream& out, std::string_view key, std::string_view v) {
  out << key << '=' << v << '\n';
}

} // namespace cogmet
