#include "cogmet/lz78.hpp"

#include <bit>
#include <string>
#include <unordered_map>

#include "cogmet/error.hpp"

namespace cogmet::lz78 {

namespace {

// ceil(log2(x)) for x >= 1; 0 for x = 1.
std::uint64_t ceil_log2(std::uint64_t x) {
  return x <= 1 ? 0 : std::bit_width(x - 1);
}

std::uint64_t trie_key(std::uint64_t node, std::uint32_t symbol) {
  return (node << 32) | symbol;
}

} // namespace

Lz78Parse parse(std::span<const std::uint32_t> message,
                std::uint64_t alphabet_size) {
  if (alphabet_size < 1) {
    throw ValidationError("SymbolOutOfRange", "alphabet size must be >= 1");
  }
  Lz78Parse result;
  result.alphabet_size_s = alphabet_size;
  result.source_length = message.size();

  // Dictionary trie: node 0 is the empty phrase, node j is phrase j.
  std::unordered_map<std::uint64_t, std::uint64_t> child;
  child.reserve(message.size());

  std::uint64_t current = 0; // node of the match in progress
  for (std::size_t i = 0; i < message.size(); ++i) {
    const std::uint32_t s = message[i];
    if (s >= alphabet_size) {
      throw ValidationError("SymbolOutOfRange",
                            "symbol " + std::to_string(s) + " at position " +
                                std::to_string(i) + " exceeds alphabet size " +
                                std::to_string(alphabet_size));
    }
    const auto it = child.find(trie_key(current, s));
    if (it != child.end()) {
      current = it->second;
      continue;
    }
    result.phrases.push_back({current, static_cast<std::int64_t>(s)});
    child.emplace(trie_key(current, s), result.phrases.size());
    current = 0;
  }
  if (current != 0) {
    // Input ended inside a known phrase.
    result.phrases.push_back({current, kNoSymbol});
  }
  return result;
}

Lz78Parse parse_bytes(std::string_view text, std::uint64_t alphabet_size) {
  std::vector<std::uint32_t> symbols;
  symbols.reserve(text.size());
  for (unsigned char c : text) symbols.push_back(c);
  return parse(symbols, alphabet_size);
}

ComplexityEstimate complexity_estimate(const Lz78Parse& p) {
  ComplexityEstimate e;
  e.phrase_count = p.phrases.size();
  const std::uint64_t symbol_bits = ceil_log2(p.alphabet_size_s);
  std::uint64_t bits = 0;
  for (std::uint64_t j = 1; j <= e.phrase_count; ++j) {
    bits += ceil_log2(j) + symbol_bits;
  }
  e.bit_estimate = static_cast<double>(bits);
  return e;
}

} // namespace cogmet::lz78
