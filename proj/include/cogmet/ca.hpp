#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cogmet::ca {

// 1-D cellular-automata bench: rule tables with a prescribed Langton λ,
// deterministic synchronous evolution on a periodic lattice, entropy and
// activity measurement, and λ sweeps. State 0 is the quiescent state.

using Cell = std::uint8_t;
using Row = std::vector<Cell>;

struct RuleTable {
  std::uint32_t states_k = 2;
  std::uint32_t radius_r = 1;
  // k^(2r+1) entries indexed by the neighborhood read left to right in
  // base k (leftmost cell is the most significant digit).
  std::vector<Cell> outputs;

  std::size_t table_size() const noexcept { return outputs.size(); }
};

struct SpacetimeDiagram {
  std::uint32_t states_k = 2;
  std::vector<Row> rows; // rows[0] = initial condition

  std::size_t width() const noexcept { return rows.empty() ? 0 : rows[0].size(); }
  std::size_t steps() const noexcept { return rows.empty() ? 0 : rows.size() - 1; }
};

struct SweepConfig {
  std::uint32_t states_k = 2;
  std::uint32_t radius_r = 1;
  std::vector<double> lambda_grid;
  std::uint32_t samples_per_lambda = 1;
  std::size_t width = 0;
  std::size_t steps = 0;
  std::size_t transient_cutoff = 0;
  std::uint64_t seed = 0;
};

enum class WolframClass { I, II, III, IV };

const char* to_string(WolframClass c);

struct SweepRecord {
  double lambda = 0.0;
  std::uint64_t seed = 0; // per-sample derived seed
  double site_entropy_eta = 0.0;
  double capacity = 0.0; // m·e^(η·log2(1/η)) with m = width; limit m at η = 0
  double activity = 0.0; // fraction of non-quiescent cells post-cutoff
  WolframClass class_heuristic = WolframClass::I;
};

// Fraction of non-quiescent outputs in the rule table.
double lambda_of(const RuleTable& rule);

// Wolfram numbering for k = 2, r = 1: outputs[n] = bit n of code, with the
// neighborhood encoded as 4·left + 2·center + right. DomainError for
// code > 255.
RuleTable elementary_rule(std::uint32_t code);

// Exactly round(λ·k^(2r+1)) slots get a uniformly random non-quiescent
// state; slot selection by a seeded Fisher-Yates shuffle over splitmix64.
// DomainError when λ·k^(2r+1) is not an integer within 1e-9.
RuleTable random_rule_with_lambda(std::uint32_t states_k,
                                  std::uint32_t radius_r,
                                  double lambda_target, std::uint64_t seed);

// Seeded uniform random row of `width` cells in [0, k).
Row random_row(std::uint32_t states_k, std::size_t width, std::uint64_t seed);

// Synchronous update with periodic boundaries for `steps` steps.
// ValidationError (WidthTooSmall) if width < 2r+1.
SpacetimeDiagram evolve(const RuleTable& rule, const Row& initial,
                        std::size_t steps);

// Normalized entropy of the pooled cell states of all rows strictly after
// transient_cutoff: Shannon bits over the k states divided by log2(k).
// DomainError when no rows remain (steps <= cutoff).
double site_entropy(const SpacetimeDiagram& d, std::size_t transient_cutoff);

// Fraction of non-quiescent cells over the same pooled region.
double activity(const SpacetimeDiagram& d, std::size_t transient_cutoff);

// Approximate Wolfram classification. I: final row homogeneous. II: the
// trailing rows are periodic with period <= period_max. III: normalized
// site entropy of the second half >= 0.9. IV: otherwise. A heuristic; exact
// classification is undecidable.
WolframClass classify_heuristic(const SpacetimeDiagram& d,
                                std::size_t period_max = 16);

// Runs every (λ, sample) experiment of the config. Samples are independent
// and run concurrently; the output order is fixed as (λ ascending, sample
// ordinal ascending) regardless of the execution schedule.
std::vector<SweepRecord> lambda_sweep(const SweepConfig& cfg);

SweepConfig sweep_config_from_json_text(std::string_view text);

// CSV with header lambda,seed,eta,capacity,activity,class; LF endings.
std::string sweep_records_to_csv(std::span<const SweepRecord> records);

// One text row of state digits (0-9a-z). ValidationError for k > 36.
std::string render_row(const Row& row);

} // namespace cogmet::ca
