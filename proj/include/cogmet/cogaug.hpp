#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cogmet/grit.hpp"

namespace cogmet::aug {

// Cognitive-augmentation accounting over a ledger of human/cog
// transformation steps. Work W = |ψ_out - ψ_in| + ψ_lost; gain
// G = (ψ_out - ψ_in)/ψ_in; A⁺ compares cog totals against human totals.

enum class Agent { human, cog };

// DIKW and Bloom tags are metadata only: they never affect any number.
enum class Dikw { data, information, knowledge, wisdom };
enum class Bloom { remember, understand, apply, analyze, evaluate, create };

const char* to_string(Agent a);
const char* to_string(Dikw d);
const char* to_string(Bloom b);

// An information-stock snapshot: either a direct ψ value or a Boolean
// category assessed through the structural-complexity measure (default k).
struct StockSnapshot {
  std::optional<double> psi;
  std::optional<grit::BooleanCategory> category;
  std::optional<Dikw> dikw;
  std::optional<Bloom> bloom;

  double resolve_psi() const; // UnresolvablePsi when neither field is set
};

struct Step {
  std::string id;
  Agent agent = Agent::human;
  StockSnapshot in;
  StockSnapshot out;
  double psi_lost = 0.0;
  std::optional<double> time_s;   // > 0 when present
  std::optional<double> energy_j; // > 0 when present
};

struct Ledger {
  std::vector<Step> steps; // ids unique (enforced by the JSON loader)
};

struct AgentTotals {
  double w_h = 0.0, g_h = 0.0;
  double w_c = 0.0, g_c = 0.0;
};

struct EnsembleTotals {
  double w_star = 0.0, g_star = 0.0;
};

// Ratio of cog to human contribution. `unbounded` renders as "inf".
struct AugmentationFactor {
  double value = 0.0;
  bool unbounded = false;
};

struct StepMetrics {
  std::string id;
  Agent agent = Agent::human;
  double work = 0.0;
  double gain = 0.0;
  std::optional<double> efficiency; // omitted when work = 0
  std::optional<double> power_g, power_w;     // omitted without time_s
  std::optional<double> density_g, density_w; // omitted without energy_j
};

struct LedgerReport {
  std::vector<StepMetrics> steps;
  AgentTotals totals;
  EnsembleTotals ensemble;
  AugmentationFactor a_plus_w;
  AugmentationFactor a_plus_g;
  // Aggregates; power/density require every step to carry time/energy.
  std::optional<double> efficiency;
  std::optional<double> power_g, power_w;
  std::optional<double> density_g, density_w;
};

// W = |ψ_out - ψ_in| + ψ_lost, always >= 0.
double step_work(const Step& s);

// G = (ψ_out - ψ_in)/ψ_in, signed, >= -1. ZeroBaseComplexity if ψ_in = 0.
double step_gain(const Step& s);

// Work/gain sums grouped by agent, in ledger order.
AgentTotals agent_totals(const Ledger& l);

EnsembleTotals ensemble_totals(const AgentTotals& t);

// {A⁺_W, A⁺_G}. Policy: cog part 0 → 0 (unaugmented); human part 0 with a
// nonzero cog part → unbounded; otherwise the plain ratio.
std::pair<AugmentationFactor, AugmentationFactor> augmentation_factor(
    const AgentTotals& t);

// ξ = G/W. ZeroWork if W = 0.
double efficiency(double gain, double work);

// x/t. NonpositiveTime if t <= 0.
double power(double x, double time_s);

// x/E. NonpositiveEnergy if E <= 0.
double density(double x, double energy_j);

// Computes every per-step and aggregate metric; deterministic in ledger
// order. Step failures are aggregated into one error naming the step ids.
LedgerReport evaluate_ledger(const Ledger& l);

// {"steps": [{"id", "agent", "in", "out", "psi_lost", "time_s",
// "energy_j"}]} with snapshots {"psi": x | "category": {...}, "dikw", "bloom"}.
Ledger ledger_from_json_text(std::string_view text);

} // namespace cogmet::aug
