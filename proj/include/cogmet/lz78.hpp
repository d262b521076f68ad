#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace cogmet::lz78 {

// Computable upper-bound proxy for algorithmic information content via a
// fully specified LZ78 dictionary parse. The bit estimate is an UPPER BOUND
// surrogate, never the (uncomputable) Kolmogorov complexity itself.

// Marks a final partial phrase: a dictionary match that ran out of input
// before it could be extended by one symbol.
inline constexpr std::int64_t kNoSymbol = -1;

struct Phrase {
  std::uint64_t prefix_index = 0; // 0 = empty prefix, else 1-based phrase id
  std::int64_t symbol = kNoSymbol;

  friend bool operator==(const Phrase&, const Phrase&) = default;
};

struct Lz78Parse {
  std::vector<Phrase> phrases;
  std::uint64_t alphabet_size_s = 1;
  std::uint64_t source_length = 0;
};

struct ComplexityEstimate {
  std::uint64_t phrase_count = 0;
  double bit_estimate = 0.0; // Σ_{j=1..c} (⌈log2 j⌉ + ⌈log2 S⌉)
};

// Greedy left-to-right LZ78 parse: each phrase is the longest dictionary
// match extended by one symbol; a trailing match with no extension is
// emitted with kNoSymbol. ValidationError (SymbolOutOfRange) if any symbol
// index >= alphabet_size.
Lz78Parse parse(std::span<const std::uint32_t> message,
                std::uint64_t alphabet_size);

// Byte-string convenience; symbol index = byte value.
Lz78Parse parse_bytes(std::string_view text, std::uint64_t alphabet_size = 256);

ComplexityEstimate complexity_estimate(const Lz78Parse& p);

} // namespace cogmet::lz78
