#include "cogmet/cli.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "json.hpp"

#include "cogmet/ca.hpp"
#include "cogmet/cogaug.hpp"
#include "cogmet/emergence.hpp"
#include "cogmet/emit.hpp"
#include "cogmet/entropy.hpp"
#include "cogmet/error.hpp"
#include "cogmet/grit.hpp"
#include "cogmet/lz78.hpp"
#include "cogmet/phys.hpp"

namespace cogmet::cli {

namespace {

using nlohmann::ordered_json;

// Semantically bad flag combinations that CLI11 cannot express; exit 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("FileError", "cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double parse_double(std::string_view token) {
  double value = 0.0;
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ValidationError("BadNumber", "cannot parse '" + std::string(token) +
                                           "' as a number");
  }
  return value;
}

std::uint64_t parse_u64(std::string_view token) {
  std::uint64_t value = 0;
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ValidationError("BadNumber", "cannot parse '" + std::string(token) +
                                           "' as a nonnegative integer");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> values;
  for (std::string_view token : split(text, ',')) {
    values.push_back(parse_double(token));
  }
  return values;
}

// JSON numeric value; infinities are not representable, so they serialize
// as the string "inf".
ordered_json json_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return canonical_zero(v);
}

void emit_report(std::ostream& out, bool as_json, const ordered_json& j) {
  if (as_json) {
    out << j.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (value.is_string()) {
      print_kv(out, key, value.get<std::string>());
    } else if (value.is_number_unsigned()) {
      print_kv(out, key, value.get<std::uint64_t>());
    } else {
      print_kv(out, key, value.get<double>());
    }
  }
}

// ---------------------------------------------------------------- entropy

struct EntropyArgs {
  std::string dist;
  std::string from_text;
  std::string q;
  std::string hartley;
  std::string joint_file;
  std::optional<double> alpha;
  std::optional<std::uint64_t> m_symbols;
  std::optional<double> boltzmann_w;
  double boltzmann_k = 1.0;
  double gibbs_k = 1.0;
  bool want_gibbs = false;
  bool want_negentropy = false;
  bool want_normalized = false;
  bool nats = false;
  bool as_json = false;
};

int run_entropy(const EntropyArgs& a, std::ostream& out) {
  const auto units =
      a.nats ? entropy::EntropyUnits::nats() : entropy::EntropyUnits::bits();
  const std::string suffix = a.nats ? "_nats" : "_bits";

  const bool has_dist = !a.dist.empty() || !a.from_text.empty();
  const bool dist_metric = a.alpha || !a.q.empty() || a.m_symbols ||
                           a.want_gibbs || a.want_negentropy ||
                           a.want_normalized;
  if (!has_dist && dist_metric) {
    throw UsageError("distribution metrics need --dist or --from-text");
  }
  if (!has_dist && a.hartley.empty() && !a.boltzmann_w &&
      a.joint_file.empty()) {
    throw UsageError(
        "nothing to compute: give --dist, --from-text, --hartley, "
        "--boltzmann-w, or --joint");
  }

  ordered_json report;
  std::optional<entropy::ProbabilityDistribution> dist;
  if (!a.dist.empty()) {
    dist.emplace(parse_double_list(a.dist));
  } else if (!a.from_text.empty()) {
    dist.emplace(entropy::empirical_distribution(a.from_text));
  }

  if (dist) {
    report["shannon" + suffix] = json_real(entropy::shannon_entropy(*dist, units));
    if (a.want_gibbs) {
      report["gibbs"] = json_real(entropy::gibbs_entropy(*dist, a.gibbs_k));
    }
    if (a.want_negentropy) {
      report["negentropy" + suffix] = json_real(entropy::negentropy(*dist, units));
    }
    if (a.want_normalized) {
      report["normalized"] = json_real(entropy::normalized_entropy(*dist));
    }
    if (a.alpha) {
      report["renyi" + suffix] =
          json_real(entropy::renyi_entropy(*dist, *a.alpha, units));
    }
    if (!a.q.empty()) {
      const entropy::ProbabilityDistribution q(parse_double_list(a.q));
      report["kl" + suffix] =
          json_real(entropy::relative_entropy(*dist, q, units));
    }
    if (a.m_symbols) {
      report["message" + suffix] =
          json_real(entropy::message_information(*dist, *a.m_symbols, units));
    }
  }
  if (!a.hartley.empty()) {
    const auto parts = split(a.hartley, ',');
    if (parts.size() != 2) {
      throw ValidationError("BadNumber", "--hartley expects N,S");
    }
    const entropy::MessageSpec spec{parse_u64(parts[1]), parse_u64(parts[0])};
    report["hartley" + suffix] =
        json_real(entropy::hartley_information(spec, units));
  }
  if (a.boltzmann_w) {
    report["boltzmann"] = json_real(
        entropy::boltzmann_entropy({*a.boltzmann_w, a.boltzmann_k}));
  }
  if (!a.joint_file.empty()) {
    const auto rows = [&] {
      try {
        return nlohmann::json::parse(read_file(a.joint_file))
            .get<std::vector<std::vector<double>>>();
      } catch (const nlohmann::json::exception& e) {
        throw ValidationError("BadJoint", e.what());
      }
    }();
    const entropy::JointDistribution joint(rows);
    report["joint" + suffix] = json_real(entropy::joint_entropy(joint, units));
    report["conditional" + suffix] =
        json_real(entropy::conditional_entropy(joint, units));
    report["mutual" + suffix] =
        json_real(entropy::mutual_information(joint, units));
  }
  emit_report(out, a.as_json, report);
  return 0;
}

// ------------------------------------------------------------------- algo

struct AlgoArgs {
  std::string text;
  std::string file;
  std::uint64_t alphabet_size = 0; // 0 = derive from input
  bool as_json = false;
};

int run_algo(const AlgoArgs& a, std::ostream& out) {
  lz78::Lz78Parse parse;
  if (!a.text.empty()) {
    // Inline text: symbols indexed by first appearance.
    std::array<int, 256> slot{};
    slot.fill(-1);
    int distinct = 0;
    std::vector<std::uint32_t> symbols;
    symbols.reserve(a.text.size());
    for (unsigned char c : a.text) {
      if (slot[c] < 0) slot[c] = distinct++;
      symbols.push_back(static_cast<std::uint32_t>(slot[c]));
    }
    const std::uint64_t s =
        a.alphabet_size > 0 ? a.alphabet_size
                            : static_cast<std::uint64_t>(distinct);
    parse = lz78::parse(symbols, s);
  } else {
    // Raw byte file: symbol index = byte value.
    const std::string bytes = read_file(a.file);
    const std::uint64_t s = a.alphabet_size > 0 ? a.alphabet_size : 256;
    parse = lz78::parse_bytes(bytes, s);
  }
  const auto estimate = lz78::complexity_estimate(parse);
  ordered_json report;
  report["phrase_count"] = estimate.phrase_count;
  report["bit_estimate"] = json_real(estimate.bit_estimate);
  report["alphabet_size"] = parse.alphabet_size_s;
  report["source_length"] = parse.source_length;
  emit_report(out, a.as_json, report);
  return 0;
}

// ----------------------------------------------------------------- limits

struct LimitsArgs {
  std::optional<double> energy_j, entropy_jk, radius_m, mass_kg;
  bool as_json = false;
};

int run_limits(const LimitsArgs& a, std::ostream& out) {
  if (!a.energy_j && !a.entropy_jk && !a.mass_kg) {
    throw UsageError(
        "nothing to compute: give --energy-j, --entropy-jk, or --mass-kg");
  }
  ordered_json report;
  double energy = a.energy_j.value_or(0.0);
  if (a.mass_kg) {
    const double e = phys::mass_energy(*a.mass_kg);
    report["mass_energy_j"] = json_real(e);
    energy += e;
  }
  phys::System sys;
  sys.energy_j = energy;
  sys.entropy_jk = a.entropy_jk.value_or(0.0);
  sys.radius_m = a.radius_m.value_or(0.0);
  sys.mass_kg = a.mass_kg;
  if (a.energy_j || a.mass_kg) {
    report["max_ops_per_sec"] = json_real(phys::max_ops_per_sec(sys));
  }
  if (a.entropy_jk) {
    report["max_bits"] = json_real(phys::max_bits(sys));
    if (a.radius_m) {
      report["max_io_rate"] = json_real(phys::max_io_rate(sys));
    }
  }
  emit_report(out, a.as_json, report);
  return 0;
}

// -------------------------------------------------------------- emergence

struct EmergenceArgs {
  std::optional<double> m, eta;
  std::optional<double> stonier_i0, stonier_s;
  double stonier_k = 1.0;
  bool peak = false;
  bool as_json = false;
};

int run_emergence(const EmergenceArgs& a, std::ostream& out) {
  if (!a.m && !a.stonier_i0 && !a.peak) {
    throw UsageError(
        "nothing to compute: give --m/--eta, --stonier-i0/--stonier-s, or "
        "--peak");
  }
  if (a.m.has_value() != a.eta.has_value()) {
    throw UsageError("--m and --eta must be given together");
  }
  if (a.stonier_i0.has_value() != a.stonier_s.has_value()) {
    throw UsageError("--stonier-i0 and --stonier-s must be given together");
  }
  ordered_json report;
  if (a.m) {
    report["capacity"] =
        json_real(emergence::emergent_capacity({*a.m, *a.eta}));
  }
  if (a.stonier_i0) {
    report["stonier"] = json_real(emergence::stonier_information(
        {*a.stonier_i0, a.stonier_k, *a.stonier_s}));
  }
  if (a.peak) {
    const auto peak = emergence::capacity_peak();
    report["eta_star"] = json_real(peak.eta_star);
    report["gain"] = json_real(peak.gain_star);
  }
  emit_report(out, a.as_json, report);
  return 0;
}

// --------------------------------------------------------------------- ca

struct CaRunArgs {
  std::uint32_t rule = 0;
  std::size_t width = 0;
  std::size_t steps = 0;
  std::uint64_t seed = 0;
  bool render = false;
  bool as_json = false;
};

int run_ca_run(const CaRunArgs& a, std::ostream& out) {
  const ca::RuleTable rule = ca::elementary_rule(a.rule);
  const ca::Row initial = ca::random_row(rule.states_k, a.width, a.seed);
  const ca::SpacetimeDiagram diagram = ca::evolve(rule, initial, a.steps);
  if (a.render) {
    for (const ca::Row& row : diagram.rows) {
      out << ca::render_row(row) << '\n';
    }
    return 0;
  }
  // Summary over the second half of the evolution.
  const std::size_t cutoff = a.steps / 2;
  ordered_json report;
  report["lambda"] = json_real(ca::lambda_of(rule));
  report["eta"] = json_real(ca::site_entropy(diagram, cutoff));
  report["activity"] = json_real(ca::activity(diagram, cutoff));
  report["class"] = ca::to_string(ca::classify_heuristic(diagram));
  emit_report(out, a.as_json, report);
  return 0;
}

// ------------------------------------------------------------------- grit

struct GritArgs {
  std::string category_file;
  std::string subset_file;
  std::optional<double> k;
  bool rank = false;
  bool as_json = false;
};

int run_grit(const GritArgs& a, std::ostream& out) {
  const auto category =
      grit::category_from_json_text(read_file(a.category_file));
  const auto assessment = grit::structural_complexity(category, a.k);

  ordered_json report;
  report["dimensions"] = category.dimensions();
  report["members"] = static_cast<std::uint64_t>(category.size());
  report["k"] = json_real(assessment.k_scaling);
  {
    std::string joined;
    for (std::size_t i = 0; i < assessment.partial_invariances.size(); ++i) {
      if (i) joined += ',';
      joined += format_real(assessment.partial_invariances[i]);
    }
    report["invariance"] = joined;
  }
  report["phi"] = json_real(assessment.phi);
  report["psi"] = json_real(assessment.psi);
  if (!a.subset_file.empty()) {
    const auto subset =
        grit::category_from_json_text(read_file(a.subset_file));
    report["h_s"] =
        json_real(grit::representational_information(category, subset, a.k));
  }
  if (a.rank) {
    if (a.as_json) {
      ordered_json ranks = ordered_json::array();
      for (const auto& [member, value] : grit::rank_elements(category, a.k)) {
        ranks.push_back({{"member", category.render(member)},
                         {"value", json_real(value)}});
      }
      report["rank"] = std::move(ranks);
    } else {
      std::size_t i = 0;
      for (const auto& [member, value] : grit::rank_elements(category, a.k)) {
        ++i;
        report["rank_" + std::to_string(i) + "_member"] =
            category.render(member);
        report["rank_" + std::to_string(i) + "_value"] = json_real(value);
      }
    }
  }
  emit_report(out, a.as_json, report);
  return 0;
}

// ----------------------------------------------------------------- cogaug

ordered_json a_plus_json(const aug::AugmentationFactor& f) {
  if (f.unbounded) return "inf";
  return canonical_zero(f.value);
}

int run_cogaug(const std::string& ledger_file, bool as_json,
               std::ostream& out) {
  const aug::Ledger ledger =
      aug::ledger_from_json_text(read_file(ledger_file));
  const aug::LedgerReport report = aug::evaluate_ledger(ledger);

  ordered_json j;
  if (as_json) {
    ordered_json steps = ordered_json::array();
    for (const auto& m : report.steps) {
      ordered_json js;
      js["id"] = m.id;
      js["agent"] = aug::to_string(m.agent);
      js["w"] = json_real(m.work);
      js["g"] = json_real(m.gain);
      if (m.efficiency) js["xi"] = json_real(*m.efficiency);
      if (m.power_g) js["p_g"] = json_real(*m.power_g);
      if (m.power_w) js["p_w"] = json_real(*m.power_w);
      if (m.density_g) js["d_g"] = json_real(*m.density_g);
      if (m.density_w) js["d_w"] = json_real(*m.density_w);
      steps.push_back(std::move(js));
    }
    j["steps"] = std::move(steps);
  } else {
    for (const auto& m : report.steps) {
      const std::string prefix = "step_" + m.id + "_";
      j[prefix + "agent"] = aug::to_string(m.agent);
      j[prefix + "w"] = json_real(m.work);
      j[prefix + "g"] = json_real(m.gain);
      if (m.efficiency) j[prefix + "xi"] = json_real(*m.efficiency);
      if (m.power_g) j[prefix + "p_g"] = json_real(*m.power_g);
      if (m.power_w) j[prefix + "p_w"] = json_real(*m.power_w);
      if (m.density_g) j[prefix + "d_g"] = json_real(*m.density_g);
      if (m.density_w) j[prefix + "d_w"] = json_real(*m.density_w);
    }
  }
  j["w_h"] = json_real(report.totals.w_h);
  j["g_h"] = json_real(report.totals.g_h);
  j["w_c"] = json_real(report.totals.w_c);
  j["g_c"] = json_real(report.totals.g_c);
  j["w_total"] = json_real(report.ensemble.w_star);
  j["g_total"] = json_real(report.ensemble.g_star);
  j["a_plus_w"] = a_plus_json(report.a_plus_w);
  j["a_plus_g"] = a_plus_json(report.a_plus_g);
  if (report.efficiency) j["xi"] = json_real(*report.efficiency);
  if (report.power_g) j["p_g"] = json_real(*report.power_g);
  if (report.power_w) j["p_w"] = json_real(*report.power_w);
  if (report.density_g) j["d_g"] = json_real(*report.density_g);
  if (report.density_w) j["d_w"] = json_real(*report.density_w);
  emit_report(out, as_json, j);
  return 0;
}

std::string single_line(std::string text) {
  for (char& c : text) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return text;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"information and cognition metrics toolkit"};
  app.require_subcommand(1);

  EntropyArgs ent;
  auto* entropy_cmd =
      app.add_subcommand("entropy", "entropy-family metrics of a distribution");
  entropy_cmd->add_option("--dist", ent.dist,
                          "comma-separated probabilities, e.g. 0.5,0.25,0.25");
  entropy_cmd->add_option("--from-text", ent.from_text,
                          "derive the distribution from a text's bytes");
  entropy_cmd->add_option("--alpha", ent.alpha, "Renyi order (>= 0)");
  entropy_cmd->add_option("--q", ent.q,
                          "reference distribution for relative entropy");
  entropy_cmd->add_option("--m-symbols", ent.m_symbols,
                          "message length for message information");
  entropy_cmd->add_option("--hartley", ent.hartley,
                          "N,S for Hartley information");
  entropy_cmd->add_option("--boltzmann-w", ent.boltzmann_w,
                          "microstate count W");
  entropy_cmd->add_option("--boltzmann-k", ent.boltzmann_k,
                          "Boltzmann-style constant (default 1)");
  entropy_cmd->add_flag("--gibbs", ent.want_gibbs, "print Gibbs entropy");
  entropy_cmd->add_option("--gibbs-k", ent.gibbs_k,
                          "constant k for Gibbs entropy (default 1)");
  entropy_cmd->add_flag("--negentropy", ent.want_negentropy,
                        "print negentropy");
  entropy_cmd->add_flag("--normalized", ent.want_normalized,
                        "print normalized entropy");
  entropy_cmd->add_option("--joint", ent.joint_file,
                          "JSON file with a joint distribution (rows = X)");
  entropy_cmd->add_flag("--nats", ent.nats, "report in nats instead of bits");
  entropy_cmd->add_flag("--json", ent.as_json, "JSON output");

  AlgoArgs algo;
  auto* algo_cmd = app.add_subcommand(
      "algo", "LZ78 upper-bound estimate of algorithmic information");
  auto* algo_text = algo_cmd->add_option("--text", algo.text, "inline text");
  auto* algo_file = algo_cmd->add_option("--file", algo.file, "raw byte file");
  algo_cmd->add_option("--alphabet-size", algo.alphabet_size,
                       "override the alphabet size");
  algo_cmd->add_flag("--json", algo.as_json, "JSON output");
  algo_text->excludes(algo_file);

  LimitsArgs limits;
  auto* limits_cmd =
      app.add_subcommand("limits", "physical limits of computation");
  limits_cmd->add_option("--energy-j", limits.energy_j, "energy in joules");
  limits_cmd->add_option("--entropy-jk", limits.entropy_jk,
                         "thermodynamic entropy in J/K");
  limits_cmd->add_option("--radius-m", limits.radius_m, "system size in m");
  limits_cmd->add_option("--mass-kg", limits.mass_kg,
                         "mass converted to energy via mc^2");
  limits_cmd->add_flag("--json", limits.as_json, "JSON output");

  EmergenceArgs emergence;
  auto* emergence_cmd = app.add_subcommand(
      "emergence", "emergent capacity and exponential information decay");
  emergence_cmd->add_option("--m", emergence.m, "system size");
  emergence_cmd->add_option("--eta", emergence.eta,
                            "normalized entropy in (0,1]");
  emergence_cmd->add_option("--stonier-i0", emergence.stonier_i0,
                            "information at zero entropy");
  emergence_cmd->add_option("--stonier-k", emergence.stonier_k,
                            "decay scale (default 1)");
  emergence_cmd->add_option("--stonier-s", emergence.stonier_s,
                            "entropy input");
  emergence_cmd->add_flag("--peak", emergence.peak,
                          "locate the capacity peak");
  emergence_cmd->add_flag("--json", emergence.as_json, "JSON output");

  auto* ca_cmd = app.add_subcommand("ca", "cellular-automata bench");
  ca_cmd->require_subcommand(1);
  CaRunArgs ca_run;
  auto* ca_run_cmd =
      ca_cmd->add_subcommand("run", "evolve one elementary rule");
  ca_run_cmd->add_option("--rule", ca_run.rule, "elementary rule code 0..255")
      ->required();
  ca_run_cmd->add_option("--width", ca_run.width, "lattice width")->required();
  ca_run_cmd->add_option("--steps", ca_run.steps, "evolution steps")
      ->required();
  ca_run_cmd->add_option("--seed", ca_run.seed,
                         "seed for the random initial row (default 0)");
  auto* render_flag = ca_run_cmd->add_flag("--render", ca_run.render,
                                           "print the spacetime diagram");
  auto* ca_json_flag =
      ca_run_cmd->add_flag("--json", ca_run.as_json, "JSON output");
  render_flag->excludes(ca_json_flag);

  std::string sweep_config;
  bool sweep_json = false;
  auto* ca_sweep_cmd =
      ca_cmd->add_subcommand("sweep", "lambda sweep emitting CSV");
  ca_sweep_cmd->add_option("--config", sweep_config, "sweep config JSON file")
      ->required();
  ca_sweep_cmd->add_flag("--json", sweep_json,
                         "JSON records instead of CSV");

  GritArgs grit_args;
  auto* grit_cmd = app.add_subcommand(
      "grit", "structural complexity of Boolean categories");
  grit_cmd->add_option("--category", grit_args.category_file,
                       "category JSON file")
      ->required();
  grit_cmd->add_option("--subset", grit_args.subset_file,
                       "subset category JSON file (prints h_s)");
  grit_cmd->add_option("--k", grit_args.k, "scaling parameter (default 2/D)");
  grit_cmd->add_flag("--rank", grit_args.rank,
                     "rank members by element value");
  grit_cmd->add_flag("--json", grit_args.as_json, "JSON output");

  std::string ledger_file;
  bool cogaug_json = false;
  auto* cogaug_cmd =
      app.add_subcommand("cogaug", "cognitive-augmentation ledger report");
  cogaug_cmd->add_option("--ledger", ledger_file, "ledger JSON file")
      ->required();
  cogaug_cmd->add_flag("--json", cogaug_json, "JSON output");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("cogmet");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (*entropy_cmd) return run_entropy(ent, out);
    if (*algo_cmd) {
      if (algo.text.empty() && algo.file.empty()) {
        throw UsageError("algo needs --text or --file");
      }
      return run_algo(algo, out);
    }
    if (*limits_cmd) return run_limits(limits, out);
    if (*emergence_cmd) return run_emergence(emergence, out);
    if (*ca_run_cmd) return run_ca_run(ca_run, out);
    if (*ca_sweep_cmd) {
      const auto cfg =
          ca::sweep_config_from_json_text(read_file(sweep_config));
      const auto records = ca::lambda_sweep(cfg);
      if (sweep_json) {
        ordered_json rows = ordered_json::array();
        for (const ca::SweepRecord& r : records) {
          rows.push_back({{"lambda", canonical_zero(r.lambda)},
                          {"seed", r.seed},
                          {"eta", canonical_zero(r.site_entropy_eta)},
                          {"capacity", canonical_zero(r.capacity)},
                          {"activity", canonical_zero(r.activity)},
                          {"class", ca::to_string(r.class_heuristic)}});
        }
        out << rows.dump() << '\n';
      } else {
        out << ca::sweep_records_to_csv(records);
      }
      return 0;
    }
    if (*grit_cmd) return run_grit(grit_args, out);
    if (*cogaug_cmd) return run_cogaug(ledger_file, cogaug_json, out);
    throw UsageError("no subcommand given");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << single_line(e.what()) << '\n';
    return 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const MathDomainError& e) {
    err << single_line(e.what()) << '\n';
    return 3;
  } catch (const ValidationError& e) {
    err << single_line(e.what()) << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << single_line(e.what()) << '\n';
    return 2;
  }
}

} // namespace cogmet::cli
