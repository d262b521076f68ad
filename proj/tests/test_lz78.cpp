#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"

#include "cogmet/error.hpp"
#include "cogmet/lz78.hpp"
#include "cogmet/rng.hpp"

using namespace cogmet;
using namespace cogmet::lz78;

namespace {

// Independent decoder used as the round-trip oracle: expands each phrase by
// walking the prefix chain, without touching the parser's trie.
std::vector<std::uint32_t> decode(const Lz78Parse& p) {
  std::vector<std::vector<std::uint32_t>> expanded;
  expanded.push_back({}); // phrase 0: empty prefix
  std::vector<std::uint32_t> output;
  for (const Phrase& phrase : p.phrases) {
    std::vector<std::uint32_t> text = expanded.at(phrase.prefix_index);
    if (phrase.symbol != kNoSymbol) {
      text.push_back(static_cast<std::uint32_t>(phrase.symbol));
    }
    output.insert(output.end(), text.begin(), text.end());
    expanded.push_back(std::move(text));
  }
  return output;
}

std::vector<std::uint32_t> random_symbols(Splitmix64& g, std::size_t length,
                                          std::uint64_t alphabet) {
  std::vector<std::uint32_t> symbols(length);
  for (auto& s : symbols) s = static_cast<std::uint32_t>(g.below(alphabet));
  return symbols;
}

} // namespace

TEST_SUITE("lz78") {

TEST_CASE("hand-executed parses") {
  const auto empty = parse({}, 2);
  CHECK(empty.phrases.empty());

  // "AAAAAA" over a unary alphabet: (A)(AA)(AAA).
  const std::vector<std::uint32_t> unary(6, 0);
  const auto p1 = parse(unary, 1);
  REQUIRE(p1.phrases.size() == 3);
  CHECK(p1.phrases[0] == Phrase{0, 0});
  CHECK(p1.phrases[1] == Phrase{1, 0});
  CHECK(p1.phrases[2] == Phrase{2, 0});

  // "ABAB": (A)(B)(AB).
  const auto p2 = parse(std::vector<std::uint32_t>{0, 1, 0, 1}, 2);
  REQUIRE(p2.phrases.size() == 3);
  CHECK(p2.phrases[0] == Phrase{0, 0});
  CHECK(p2.phrases[1] == Phrase{0, 1});
  CHECK(p2.phrases[2] == Phrase{1, 1});

  // "AA" ends inside a known phrase: final partial phrase with no symbol.
  const auto p3 = parse(std::vector<std::uint32_t>{0, 0}, 1);
  REQUIRE(p3.phrases.size() == 2);
  CHECK(p3.phrases[1] == Phrase{1, kNoSymbol});
}

TEST_CASE("bit estimates of the worked parses") {
  const auto empty = complexity_estimate(parse({}, 2));
  CHECK(empty.phrase_count == 0);
  CHECK(empty.bit_estimate == 0.0);

  const auto unary =
      complexity_estimate(parse(std::vector<std::uint32_t>(6, 0), 1));
  CHECK(unary.phrase_count == 3);
  CHECK(unary.bit_estimate == 3.0); // 0 + 1 + 2, symbol bits are 0 for S=1

  const auto abab =
      complexity_estimate(parse(std::vector<std::uint32_t>{0, 1, 0, 1}, 2));
  CHECK(abab.phrase_count == 3);
  CHECK(abab.bit_estimate == 6.0); // (0+1) + (1+1) + (2+1)
}

TEST_CASE("symbol range is enforced") {
  CHECK_THROWS_AS(parse(std::vector<std::uint32_t>{0, 2}, 2), ValidationError);
  CHECK_THROWS_AS(parse_bytes("AB", 65), ValidationError); // 'B' = 66
  CHECK_THROWS_AS(parse({}, 0), ValidationError);
}

TEST_CASE("round trip on random strings") {
  Splitmix64 g(8811);
  for (int rep = 0; rep < 500; ++rep) {
    const std::uint64_t alphabet = 1 + g.below(6);
    const std::size_t length = g.below(400);
    const auto symbols = random_symbols(g, length, alphabet);
    const auto parsed = parse(symbols, alphabet);
    CHECK(decode(parsed) == symbols);
    CHECK(parsed.source_length == symbols.size());
    CHECK(parsed.phrases.size() <= std::max<std::size_t>(symbols.size(), 1));
  }
}

TEST_CASE("prefix indices always point backwards") {
  Splitmix64 g(17);
  const auto symbols = random_symbols(g, 600, 3);
  const auto parsed = parse(symbols, 3);
  for (std::size_t j = 0; j < parsed.phrases.size(); ++j) {
    CHECK(parsed.phrases[j].prefix_index <= j);
  }
}

TEST_CASE("unary phrase count follows the closed form") {
  for (std::size_t n = 0; n <= 200; ++n) {
    const auto parsed = parse(std::vector<std::uint32_t>(n, 0), 1);
    const auto expected = static_cast<std::uint64_t>(
        std::ceil((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0));
    CHECK(parsed.phrases.size() == expected);
  }
}

TEST_CASE("random strings need more phrases than the constant string") {
  constexpr std::size_t n = 64;
  const auto constant_count =
      parse(std::vector<std::uint32_t>(n, 0), 2).phrases.size();
  Splitmix64 g(404);
  double mean = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    mean += static_cast<double>(
        parse(random_symbols(g, n, 2), 2).phrases.size());
  }
  mean /= 100.0;
  CHECK(mean > static_cast<double>(constant_count));
}

TEST_CASE("parsing is deterministic") {
  Splitmix64 g(3);
  const auto symbols = random_symbols(g, 256, 4);
  const auto a = parse(symbols, 4);
  const auto b = parse(symbols, 4);
  CHECK(a.phrases == b.phrases);
}

} // TEST_SUITE
