#include "cogmet/ca.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <thread>

#include "json.hpp"

#include "cogmet/emergence.hpp"
#include "cogmet/entropy.hpp"
#include "cogmet/error.hpp"
#include "cogmet/rng.hpp"

namespace cogmet::ca {

namespace {

constexpr std::size_t kMaxTableSize = 1u << 22;

std::size_t checked_table_size(std::uint32_t k, std::uint32_t r) {
  if (k < 2) throw ValidationError("RuleTable", "states_k must be >= 2");
  if (r < 1) throw ValidationError("RuleTable", "radius_r must be >= 1");
  std::size_t size = 1;
  for (std::uint32_t i = 0; i < 2 * r + 1; ++i) {
    size *= k;
    if (size > kMaxTableSize) {
      throw ValidationError("RuleTable", "rule table k^(2r+1) exceeds 2^22");
    }
  }
  return size;
}

void check_row_cells(const Row& row, std::uint32_t k) {
  for (Cell c : row) {
    if (c >= k) {
      throw ValidationError("CellOutOfRange",
                            "cell state " + std::to_string(c) +
                                " exceeds states_k " + std::to_string(k));
    }
  }
}

// Pooled region: rows with index strictly greater than transient_cutoff.
std::span<const Row> pooled_rows(const SpacetimeDiagram& d,
                                 std::size_t transient_cutoff) {
  if (d.rows.empty() || d.steps() <= transient_cutoff) {
    throw MathDomainError("DomainError",
                          "transient_cutoff leaves no rows to measure");
  }
  return std::span<const Row>(d.rows).subspan(transient_cutoff + 1);
}

std::vector<std::uint64_t> state_counts(std::span<const Row> rows,
                                        std::uint32_t k) {
  std::vector<std::uint64_t> counts(k, 0);
  for (const Row& row : rows) {
    for (Cell c : row) ++counts[c];
  }
  return counts;
}

} // namespace

const char* to_string(WolframClass c) {
  switch (c) {
    case WolframClass::I: return "I";
    case WolframClass::II: return "II";
    case WolframClass::III: return "III";
    case WolframClass::IV: return "IV";
  }
  return "?";
}

double lambda_of(const RuleTable& rule) {
  if (rule.outputs.empty()) {
    throw ValidationError("RuleTable", "rule table has no outputs");
  }
  std::size_t active = 0;
  for (Cell c : rule.outputs) active += (c != 0);
  return static_cast<double>(active) /
         static_cast<double>(rule.outputs.size());
}

RuleTable elementary_rule(std::uint32_t code) {
  if (code > 255) {
    throw MathDomainError("DomainError",
                          "elementary rule code must be in 0..255");
  }
  RuleTable rule{2, 1, Row(8, 0)};
  for (std::uint32_t n = 0; n < 8; ++n) {
    rule.outputs[n] = static_cast<Cell>((code >> n) & 1u);
  }
  return rule;
}

RuleTable random_rule_with_lambda(std::uint32_t states_k,
                                  std::uint32_t radius_r,
                                  double lambda_target, std::uint64_t seed) {
  const std::size_t table = checked_table_size(states_k, radius_r);
  if (!(lambda_target >= 0.0 && lambda_target <= 1.0)) {
    throw MathDomainError("DomainError", "lambda must lie in [0, 1]");
  }
  const double exact = lambda_target * static_cast<double>(table);
  const auto count = static_cast<std::size_t>(std::llround(exact));
  if (std::abs(exact - static_cast<double>(count)) > 1e-9) {
    throw MathDomainError(
        "DomainError", "lambda*k^(2r+1) = " + std::to_string(exact) +
                           " is not an integer count of table slots");
  }

  RuleTable rule{states_k, radius_r, Row(table, 0)};
  std::vector<std::uint32_t> slots(table);
  std::iota(slots.begin(), slots.end(), 0u);
  Splitmix64 g(seed);
  for (std::size_t i = table - 1; i > 0; --i) {
    const std::uint64_t j = g.below(i + 1);
    std::swap(slots[i], slots[j]);
  }
  for (std::size_t i = 0; i < count; ++i) {
    rule.outputs[slots[i]] =
        static_cast<Cell>(1 + g.below(states_k - 1));
  }
  return rule;
}

Row random_row(std::uint32_t states_k, std::size_t width,
               std::uint64_t seed) {
  if (states_k < 2) throw ValidationError("RuleTable", "states_k must be >= 2");
  Row row(width);
  Splitmix64 g(seed);
  for (Cell& c : row) c = static_cast<Cell>(g.below(states_k));
  return row;
}

SpacetimeDiagram evolve(const RuleTable& rule, const Row& initial,
                        std::size_t steps) {
  const std::size_t neighborhood = 2 * rule.radius_r + 1;
  if (initial.size() < neighborhood) {
    throw ValidationError("WidthTooSmall",
                          "width " + std::to_string(initial.size()) +
                              " is smaller than the neighborhood " +
                              std::to_string(neighborhood));
  }
  check_row_cells(initial, rule.states_k);

  SpacetimeDiagram d;
  d.states_k = rule.states_k;
  d.rows.reserve(steps + 1);
  d.rows.push_back(initial);

  const std::size_t width = initial.size();
  const std::size_t r = rule.radius_r;
  const std::uint64_t k = rule.states_k;
  Row next(width);
  for (std::size_t t = 0; t < steps; ++t) {
    const Row& prev = d.rows.back();
    for (std::size_t i = 0; i < width; ++i) {
      std::uint64_t idx = 0;
      for (std::size_t off = 0; off < neighborhood; ++off) {
        const std::size_t pos = (i + width - r + off) % width;
        idx = idx * k + prev[pos];
      }
      next[i] = rule.outputs[idx];
    }
    d.rows.push_back(next);
  }
  return d;
}

double site_entropy(const SpacetimeDiagram& d, std::size_t transient_cutoff) {
  const auto rows = pooled_rows(d, transient_cutoff);
  const auto counts = state_counts(rows, d.states_k);
  const auto total = static_cast<double>(rows.size() * d.width());
  std::vector<double> probs(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    probs[i] = static_cast<double>(counts[i]) / total;
  }
  const entropy::ProbabilityDistribution dist(std::move(probs));
  const double eta = entropy::shannon_entropy(dist) /
                     std::log2(static_cast<double>(d.states_k));
  // The ratio can overshoot 1 by an ulp for k that are not powers of two.
  return std::min(eta, 1.0);
}

double activity(const SpacetimeDiagram& d, std::size_t transient_cutoff) {
  const auto rows = pooled_rows(d, transient_cutoff);
  const auto counts = state_counts(rows, d.states_k);
  const auto total = static_cast<double>(rows.size() * d.width());
  return (total - static_cast<double>(counts[0])) / total;
}

WolframClass classify_heuristic(const SpacetimeDiagram& d,
                                std::size_t period_max) {
  const std::size_t last = d.steps();
  if (last < 2) {
    throw MathDomainError("DomainError",
                          "classification needs at least 2 steps");
  }
  const Row& final_row = d.rows[last];
  if (std::all_of(final_row.begin(), final_row.end(),
                  [&](Cell c) { return c == final_row[0]; })) {
    return WolframClass::I;
  }
  // Periodic tail: row[t] == row[t-p] over a trailing window spanning at
  // least two full periods (>= p+1 comparisons).
  const std::size_t p_limit = std::min(period_max, last / 2);
  for (std::size_t p = 1; p <= p_limit; ++p) {
    const std::size_t start = std::max(p, last > 4 * period_max
                                              ? last - 4 * period_max
                                              : p);
    bool periodic = true;
    for (std::size_t t = start; t <= last && periodic; ++t) {
      periodic = (d.rows[t] == d.rows[t - p]);
    }
    if (periodic && last - start + 1 >= p + 1) return WolframClass::II;
  }
  if (site_entropy(d, last / 2) >= 0.9) return WolframClass::III;
  return WolframClass::IV;
}

namespace {

SweepRecord run_sample(const SweepConfig& cfg, double lambda,
                       std::uint64_t ordinal) {
  const std::uint64_t sample_seed = Splitmix64::at(cfg.seed, ordinal);
  Splitmix64 stream(sample_seed);
  const std::uint64_t rule_seed = stream.next();
  const std::uint64_t row_seed = stream.next();

  const RuleTable rule =
      random_rule_with_lambda(cfg.states_k, cfg.radius_r, lambda, rule_seed);
  const Row initial = random_row(cfg.states_k, cfg.width, row_seed);
  const SpacetimeDiagram d = evolve(rule, initial, cfg.steps);

  SweepRecord rec;
  rec.lambda = lambda;
  rec.seed = sample_seed;
  rec.site_entropy_eta = site_entropy(d, cfg.transient_cutoff);
  rec.activity = activity(d, cfg.transient_cutoff);
  const auto m = static_cast<double>(cfg.width);
  // Continuous extension at η = 0: capacity → m.
  rec.capacity = rec.site_entropy_eta == 0.0
                     ? m
                     : emergence::emergent_capacity({m, rec.site_entropy_eta});
  rec.class_heuristic = classify_heuristic(d);
  return rec;
}

void validate_sweep_config(const SweepConfig& cfg) {
  const std::size_t table = checked_table_size(cfg.states_k, cfg.radius_r);
  if (cfg.lambda_grid.empty()) {
    throw ValidationError("SweepConfig", "lambda_grid must be non-empty");
  }
  if (cfg.samples_per_lambda < 1) {
    throw ValidationError("SweepConfig", "samples_per_lambda must be >= 1");
  }
  if (cfg.width < 2 * cfg.radius_r + 1) {
    throw ValidationError("WidthTooSmall",
                          "width must be at least the neighborhood size");
  }
  if (cfg.steps <= cfg.transient_cutoff) {
    throw MathDomainError("DomainError",
                          "steps must exceed transient_cutoff");
  }
  for (double lambda : cfg.lambda_grid) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
      throw MathDomainError("DomainError", "lambda must lie in [0, 1]");
    }
    const double exact = lambda * static_cast<double>(table);
    if (std::abs(exact - std::llround(exact)) > 1e-9) {
      throw MathDomainError("DomainError",
                            "lambda " + std::to_string(lambda) +
                                " is not an exact slot count for this table");
    }
  }
}

} // namespace

std::vector<SweepRecord> lambda_sweep(const SweepConfig& cfg) {
  validate_sweep_config(cfg);

  std::vector<double> grid = cfg.lambda_grid;
  std::sort(grid.begin(), grid.end());

  const std::size_t jobs = grid.size() * cfg.samples_per_lambda;
  std::vector<SweepRecord> records(jobs);

  // Record j depends only on (cfg, j), so any schedule produces the same
  // output vector.
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    try {
      for (;;) {
        const std::size_t j = cursor.fetch_add(1);
        if (j >= jobs) return;
        records[j] = run_sample(cfg, grid[j / cfg.samples_per_lambda],
                                static_cast<std::uint64_t>(j));
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      cursor.store(jobs); // stop the other workers
    }
  };

  const auto hw = static_cast<std::size_t>(std::thread::hardware_concurrency());
  const std::size_t n_threads = std::max<std::size_t>(1, std::min(hw, jobs));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

SweepConfig sweep_config_from_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("BadConfig", e.what());
  }
  SweepConfig cfg;
  try {
    cfg.states_k = j.at("states_k").get<std::uint32_t>();
    cfg.radius_r = j.at("radius_r").get<std::uint32_t>();
    cfg.lambda_grid = j.at("lambda_grid").get<std::vector<double>>();
    cfg.samples_per_lambda = j.at("samples_per_lambda").get<std::uint32_t>();
    cfg.width = j.at("width").get<std::size_t>();
    cfg.steps = j.at("steps").get<std::size_t>();
    cfg.transient_cutoff = j.at("transient_cutoff").get<std::size_t>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("BadConfig", e.what());
  }
  return cfg;
}

std::string sweep_records_to_csv(std::span<const SweepRecord> records) {
  std::string csv = "lambda,seed,eta,capacity,activity,class\n";
  char buf[128];
  for (const SweepRecord& r : records) {
    std::snprintf(buf, sizeof buf, "%.6f,%llu,%.6f,", r.lambda,
                  static_cast<unsigned long long>(r.seed),
                  r.site_entropy_eta);
    csv += buf;
    if (std::abs(r.capacity) >= 1e6) {
      std::snprintf(buf, sizeof buf, "%.6e", r.capacity);
    } else {
      std::snprintf(buf, sizeof buf, "%.6f", r.capacity);
    }
    csv += buf;
    std::snprintf(buf, sizeof buf, ",%.6f,%s\n", r.activity,
                  to_string(r.class_heuristic));
    csv += buf;
  }
  return csv;
}

std::string render_row(const Row& row) {
  static constexpr char digits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string out;
  out.reserve(row.size());
  for (Cell c : row) {
    if (c >= 36) {
      throw ValidationError("CellOutOfRange",
                            "cannot render states beyond 36 as digits");
    }
    out += digits[c];
  }
  return out;
}

} // namespace cogmet::ca
