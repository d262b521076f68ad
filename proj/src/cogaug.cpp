#include "cogmet/cogaug.hpp"

#include <cmath>
#include <unordered_set>

#include "json.hpp"

#include "cogmet/error.hpp"

namespace cogmet::aug {

const char* to_string(Agent a) {
  return a == Agent::human ? "human" : "cog";
}

const char* to_string(Dikw d) {
  switch (d) {
    case Dikw::data: return "data";
    case Dikw::information: return "information";
    case Dikw::knowledge: return "knowledge";
    case Dikw::wisdom: return "wisdom";
  }
  return "?";
}

const char* to_string(Bloom b) {
  switch (b) {
    case Bloom::remember: return "remember";
    case Bloom::understand: return "understand";
    case Bloom::apply: return "apply";
    case Bloom::analyze: return "analyze";
    case Bloom::evaluate: return "evaluate";
    case Bloom::create: return "create";
  }
  return "?";
}

double StockSnapshot::resolve_psi() const {
  if (psi) {
    return *psi;
  }
  if (category) {
    return grit::structural_complexity(*category).psi;
  }
  throw ValidationError("UnresolvablePsi",
                        "snapshot has neither psi nor category");
}

double step_work(const Step& s) {
  return std::abs(s.out.resolve_psi() - s.in.resolve_psi()) + s.psi_lost;
}

double step_gain(const Step& s) {
  const double psi_in = s.in.resolve_psi();
  if (!(psi_in > 0.0)) {
    throw MathDomainError("ZeroBaseComplexity",
                          "step " + s.id + ": psi_in is zero");
  }
  return (s.out.resolve_psi() - psi_in) / psi_in;
}

AgentTotals agent_totals(const Ledger& l) {
  AgentTotals t;
  for (const Step& s : l.steps) {
    const double w = step_work(s);
    const double g = step_gain(s);
    if (s.agent == Agent::human) {
      t.w_h += w;
      t.g_h += g;
    } else {
      t.w_c += w;
      t.g_c += g;
    }
  }
  return t;
}

EnsembleTotals ensemble_totals(const AgentTotals& t) {
  return {t.w_h + t.w_c, t.g_h + t.g_c};
}

namespace {

AugmentationFactor ratio_policy(double cog_part, double human_part) {
  if (cog_part == 0.0) return {0.0, false};
  if (human_part == 0.0) return {0.0, true};
  return {cog_part / human_part, false};
}

} // namespace

std::pair<AugmentationFactor, AugmentationFactor> augmentation_factor(
    const AgentTotals& t) {
  return {ratio_policy(t.w_c, t.w_h), ratio_policy(t.g_c, t.g_h)};
}

double efficiency(double gain, double work) {
  if (work == 0.0) {
    throw MathDomainError("ZeroWork", "efficiency needs W > 0");
  }
  return gain / work;
}

double power(double x, double time_s) {
  if (!(time_s > 0.0)) {
    throw MathDomainError("NonpositiveTime", "power needs t > 0");
  }
  return x / time_s;
}

double density(double x, double energy_j) {
  if (!(energy_j > 0.0)) {
    throw MathDomainError("NonpositiveEnergy", "density needs E > 0");
  }
  return x / energy_j;
}

LedgerReport evaluate_ledger(const Ledger& l) {
  LedgerReport report;
  report.steps.reserve(l.steps.size());

  std::string validation_failures;
  std::string domain_failures;
  for (const Step& s : l.steps) {
    try {
      StepMetrics m;
      m.id = s.id;
      m.agent = s.agent;
      m.work = step_work(s);
      m.gain = step_gain(s);
      if (m.work != 0.0) m.efficiency = m.gain / m.work;
      if (s.time_s) {
        m.power_g = power(m.gain, *s.time_s);
        m.power_w = power(m.work, *s.time_s);
      }
      if (s.energy_j) {
        m.density_g = density(m.gain, *s.energy_j);
        m.density_w = density(m.work, *s.energy_j);
      }
      report.steps.push_back(std::move(m));
    } catch (const MathDomainError& e) {
      if (!domain_failures.empty()) domain_failures += "; ";
      domain_failures += "step " + s.id + ": " + e.code();
    } catch (const ValidationError& e) {
      if (!validation_failures.empty()) validation_failures += "; ";
      validation_failures += "step " + s.id + ": " + e.code();
    }
  }
  if (!validation_failures.empty()) {
    throw ValidationError("LedgerStepErrors", validation_failures);
  }
  if (!domain_failures.empty()) {
    throw MathDomainError("LedgerStepErrors", domain_failures);
  }

  for (const StepMetrics& m : report.steps) {
    if (m.agent == Agent::human) {
      report.totals.w_h += m.work;
      report.totals.g_h += m.gain;
    } else {
      report.totals.w_c += m.work;
      report.totals.g_c += m.gain;
    }
  }
  report.ensemble = ensemble_totals(report.totals);
  std::tie(report.a_plus_w, report.a_plus_g) =
      augmentation_factor(report.totals);

  if (report.ensemble.w_star != 0.0) {
    report.efficiency = report.ensemble.g_star / report.ensemble.w_star;
  }
  if (!l.steps.empty()) {
    double total_time = 0.0, total_energy = 0.0;
    bool all_time = true, all_energy = true;
    for (const Step& s : l.steps) {
      if (s.time_s) total_time += *s.time_s; else all_time = false;
      if (s.energy_j) total_energy += *s.energy_j; else all_energy = false;
    }
    if (all_time) {
      report.power_g = power(report.ensemble.g_star, total_time);
      report.power_w = power(report.ensemble.w_star, total_time);
    }
    if (all_energy) {
      report.density_g = density(report.ensemble.g_star, total_energy);
      report.density_w = density(report.ensemble.w_star, total_energy);
    }
  }
  return report;
}

namespace {

using nlohmann::json;

std::optional<Dikw> parse_dikw(const json& j, const std::string& id) {
  if (!j.contains("dikw")) return std::nullopt;
  const auto s = j.at("dikw").get<std::string>();
  if (s == "data") return Dikw::data;
  if (s == "information") return Dikw::information;
  if (s == "knowledge") return Dikw::knowledge;
  if (s == "wisdom") return Dikw::wisdom;
  throw ValidationError("BadLedger",
                        "step " + id + ": unknown dikw tag '" + s + "'");
}

std::optional<Bloom> parse_bloom(const json& j, const std::string& id) {
  if (!j.contains("bloom")) return std::nullopt;
  const auto s = j.at("bloom").get<std::string>();
  if (s == "remember") return Bloom::remember;
  if (s == "understand") return Bloom::understand;
  if (s == "apply") return Bloom::apply;
  if (s == "analyze") return Bloom::analyze;
  if (s == "evaluate") return Bloom::evaluate;
  if (s == "create") return Bloom::create;
  throw ValidationError("BadLedger",
                        "step " + id + ": unknown bloom tag '" + s + "'");
}

StockSnapshot parse_snapshot(const json& j, const std::string& id,
                             const char* which) {
  StockSnapshot snap;
  const bool has_psi = j.contains("psi");
  const bool has_category = j.contains("category");
  if (has_psi == has_category) {
    throw ValidationError("BadLedger",
                          "step " + id + ": snapshot '" + which +
                              "' needs exactly one of psi|category");
  }
  if (has_psi) {
    const double psi = j.at("psi").get<double>();
    if (!(psi >= 0.0)) {
      throw ValidationError("BadLedger",
                            "step " + id + ": psi must be >= 0");
    }
    snap.psi = psi;
  } else {
    snap.category = grit::category_from_json_text(j.at("category").dump());
  }
  snap.dikw = parse_dikw(j, id);
  snap.bloom = parse_bloom(j, id);
  return snap;
}

} // namespace

Ledger ledger_from_json_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError("BadLedger", e.what());
  }

  Ledger ledger;
  try {
    const json& steps = j.at("steps");
    std::unordered_set<std::string> seen_ids;
    for (const json& js : steps) {
      Step s;
      s.id = js.at("id").get<std::string>();
      if (!seen_ids.insert(s.id).second) {
        throw ValidationError("DuplicateStepId",
                              "step id '" + s.id + "' appears twice");
      }
      const auto agent = js.at("agent").get<std::string>();
      if (agent == "human") {
        s.agent = Agent::human;
      } else if (agent == "cog") {
        s.agent = Agent::cog;
      } else {
        throw ValidationError("BadLedger", "step " + s.id +
                                               ": agent must be human|cog, got '" +
                                               agent + "'");
      }
      s.in = parse_snapshot(js.at("in"), s.id, "in");
      s.out = parse_snapshot(js.at("out"), s.id, "out");
      if (js.contains("psi_lost")) {
        s.psi_lost = js.at("psi_lost").get<double>();
        if (!(s.psi_lost >= 0.0)) {
          throw ValidationError("BadLedger",
                                "step " + s.id + ": psi_lost must be >= 0");
        }
      }
      if (js.contains("time_s")) {
        s.time_s = js.at("time_s").get<double>();
        if (!(*s.time_s > 0.0)) {
          throw ValidationError("BadLedger",
                                "step " + s.id + ": time_s must be > 0");
        }
      }
      if (js.contains("energy_j")) {
        s.energy_j = js.at("energy_j").get<double>();
        if (!(*s.energy_j > 0.0)) {
          throw ValidationError("BadLedger",
                                "step " + s.id + ": energy_j must be > 0");
        }
      }
      ledger.steps.push_back(std::move(s));
    }
  } catch (const json::exception& e) {
    throw ValidationError("BadLedger", e.what());
  }
  return ledger;
}

} // namespace cogmet::aug
