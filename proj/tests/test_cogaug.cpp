#include <cmath>

#include "doctest.h"

#include "cogmet/cogaug.hpp"
#include "cogmet/error.hpp"
#include "cogmet/rng.hpp"

using namespace cogmet;
using namespace cogmet::aug;

namespace {

Step psi_step(std::string id, Agent agent, double psi_in, double psi_out,
              double lost = 0.0) {
  Step s;
  s.id = std::move(id);
  s.agent = agent;
  s.in.psi = psi_in;
  s.out.psi = psi_out;
  s.psi_lost = lost;
  return s;
}

} // namespace

TEST_SUITE("cogaug") {

TEST_CASE("step work") {
  CHECK(step_work(psi_step("a", Agent::human, 0.7357588823428847, 1.0)) ==
        doctest::Approx(0.26424111765711533).epsilon(1e-12));
  CHECK(step_work(psi_step("b", Agent::human, 0.4, 0.4)) == 0.0);
  CHECK(step_work(psi_step("c", Agent::human, 0.4, 0.4, 0.5)) == 0.5);
  // Work is direction-agnostic.
  CHECK(step_work(psi_step("d", Agent::human, 1.0, 0.4)) ==
        doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("step gain") {
  CHECK(step_gain(psi_step("a", Agent::human, 0.7357588823428847, 1.0)) ==
        doctest::Approx(0.35914091422952255).epsilon(1e-12));
  CHECK(step_gain(psi_step("b", Agent::human, 0.4, 0.4)) == 0.0);
  CHECK(step_gain(psi_step("c", Agent::human, 0.4, 0.0)) == -1.0);
  CHECK_THROWS_AS(step_gain(psi_step("d", Agent::human, 0.0, 1.0)),
                  MathDomainError);
}

TEST_CASE("category snapshots resolve through structural complexity") {
  Step s;
  s.id = "cat";
  s.agent = Agent::cog;
  s.in.category = grit::BooleanCategory(2, {0b00, 0b10});
  s.out.category = grit::BooleanCategory(2, {0b00});
  CHECK(step_work(s) == doctest::Approx(0.26424111765711533).epsilon(1e-12));
  CHECK(step_gain(s) == doctest::Approx(0.35914091422952255).epsilon(1e-12));

  StockSnapshot neither;
  CHECK_THROWS_AS(neither.resolve_psi(), ValidationError);
}

TEST_CASE("agent and ensemble totals") {
  Ledger ledger;
  ledger.steps.push_back(psi_step("h1", Agent::human, 1.0, 1.2));
  ledger.steps.push_back(psi_step("c1", Agent::cog, 1.2, 1.8));
  const AgentTotals t = agent_totals(ledger);
  CHECK(t.w_h == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(t.w_c == doctest::Approx(0.6).epsilon(1e-12));
  const EnsembleTotals e = ensemble_totals(t);
  CHECK(e.w_star == doctest::Approx(0.8).epsilon(1e-12));

  CHECK(agent_totals(Ledger{}).w_h == 0.0);
  CHECK(agent_totals(Ledger{}).g_c == 0.0);
}

TEST_CASE("augmentation factor policy") {
  const auto [w_a, g_a] = augmentation_factor({0.2, 0.1, 0.6, 0.3});
  CHECK(w_a.value == doctest::Approx(3.0).epsilon(1e-12));
  CHECK_FALSE(w_a.unbounded);
  CHECK(g_a.value == doctest::Approx(3.0).epsilon(1e-12));

  // Humans working alone are not augmented at all.
  const auto [alone_w, alone_g] = augmentation_factor({0.5, 0.4, 0.0, 0.0});
  CHECK(alone_w.value == 0.0);
  CHECK_FALSE(alone_w.unbounded);
  CHECK(alone_g.value == 0.0);

  // Cogs working alone: no upward bound.
  const auto [cog_w, cog_g] = augmentation_factor({0.0, 0.0, 1.0, 0.5});
  CHECK(cog_w.unbounded);
  CHECK(cog_g.unbounded);

  const auto [zero_w, zero_g] = augmentation_factor({0.0, 0.0, 0.0, 0.0});
  CHECK(zero_w.value == 0.0);
  CHECK_FALSE(zero_w.unbounded);
  CHECK_FALSE(zero_g.unbounded);
}

TEST_CASE("efficiency, power, density") {
  CHECK(efficiency(0.35914091422952255, 0.26424111765711533) ==
        doctest::Approx(1.3591409142295225).epsilon(1e-12));
  CHECK(efficiency(0.0, 1.0) == 0.0);
  CHECK(efficiency(0.7, 0.7) == 1.0);
  CHECK_THROWS_AS(efficiency(0.5, 0.0), MathDomainError);

  CHECK(power(0.5, 2.0) == 0.25);
  CHECK(power(0.8, 4.0) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK_THROWS_AS(power(0.5, 0.0), MathDomainError);
  CHECK_THROWS_AS(power(0.5, -1.0), MathDomainError);

  CHECK(density(0.5, 5.0) == 0.1);
  CHECK(density(1.0, 2.0) == 0.5);
  CHECK_THROWS_AS(density(0.5, 0.0), MathDomainError);
}

TEST_CASE("lossless gaining steps obey xi = 1/psi_in") {
  Splitmix64 g(321);
  for (int rep = 0; rep < 500; ++rep) {
    const double psi_in = g.positive_unit_real() * 10.0;
    const double psi_out = psi_in + g.positive_unit_real() * 5.0;
    const Step s = psi_step("x", Agent::human, psi_in, psi_out);
    const double xi = efficiency(step_gain(s), step_work(s));
    CHECK(xi == doctest::Approx(1.0 / psi_in).epsilon(1e-12));
  }
}

TEST_CASE("evaluate_ledger composes the full report") {
  Ledger ledger;
  ledger.steps.push_back(psi_step("h1", Agent::human, 1.0, 1.2));
  ledger.steps.push_back(psi_step("c1", Agent::cog, 1.2, 1.8));
  const LedgerReport report = evaluate_ledger(ledger);
  REQUIRE(report.steps.size() == 2);
  CHECK(report.ensemble.w_star == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(report.a_plus_w.value == doctest::Approx(3.0).epsilon(1e-12));
  CHECK_FALSE(report.a_plus_w.unbounded);
  // No step carries time or energy: aggregates stay empty.
  CHECK_FALSE(report.power_g.has_value());
  CHECK_FALSE(report.density_g.has_value());
  CHECK(report.efficiency.has_value());

  // Human-only ledger: both factors are zero.
  Ledger alone;
  alone.steps.push_back(psi_step("h1", Agent::human, 1.0, 1.5));
  const LedgerReport alone_report = evaluate_ledger(alone);
  CHECK(alone_report.a_plus_w.value == 0.0);
  CHECK(alone_report.a_plus_g.value == 0.0);

  // Empty ledger: all totals zero.
  const LedgerReport empty = evaluate_ledger(Ledger{});
  CHECK(empty.ensemble.w_star == 0.0);
  CHECK(empty.ensemble.g_star == 0.0);
  CHECK(empty.a_plus_w.value == 0.0);
  CHECK_FALSE(empty.efficiency.has_value());
}

TEST_CASE("reclassifying every agent flips A+ but keeps the totals") {
  Ledger ledger;
  ledger.steps.push_back(psi_step("s1", Agent::human, 1.0, 1.2));
  ledger.steps.push_back(psi_step("s2", Agent::human, 1.2, 1.1));
  ledger.steps.push_back(psi_step("s3", Agent::human, 1.1, 2.0, 0.25));
  const LedgerReport before = evaluate_ledger(ledger);
  CHECK(before.a_plus_w.value == 0.0);

  for (Step& s : ledger.steps) s.agent = Agent::cog;
  const LedgerReport after = evaluate_ledger(ledger);
  CHECK(after.a_plus_w.unbounded);
  CHECK(after.a_plus_g.unbounded);
  CHECK(after.ensemble.w_star == before.ensemble.w_star);
  CHECK(after.ensemble.g_star == before.ensemble.g_star);
}

TEST_CASE("dikw and bloom tags never affect the numbers") {
  Ledger ledger;
  ledger.steps.push_back(psi_step("s1", Agent::human, 0.5, 0.9, 0.1));
  ledger.steps.back().time_s = 2.0;
  ledger.steps.back().energy_j = 4.0;
  const LedgerReport baseline = evaluate_ledger(ledger);

  const Dikw dikw_tags[] = {Dikw::data, Dikw::information, Dikw::knowledge,
                            Dikw::wisdom};
  const Bloom bloom_tags[] = {Bloom::remember, Bloom::understand, Bloom::apply,
                              Bloom::analyze, Bloom::evaluate, Bloom::create};
  for (Dikw d : dikw_tags) {
    for (Bloom b : bloom_tags) {
      ledger.steps.back().in.dikw = d;
      ledger.steps.back().in.bloom = b;
      ledger.steps.back().out.dikw = d;
      ledger.steps.back().out.bloom = b;
      const LedgerReport tagged = evaluate_ledger(ledger);
      CHECK(tagged.steps[0].work == baseline.steps[0].work);
      CHECK(tagged.steps[0].gain == baseline.steps[0].gain);
      CHECK(tagged.ensemble.w_star == baseline.ensemble.w_star);
      CHECK(*tagged.power_w == *baseline.power_w);
      CHECK(*tagged.density_g == *baseline.density_g);
    }
  }
}

TEST_CASE("per-step metric omission policy") {
  Ledger ledger;
  ledger.steps.push_back(psi_step("timed", Agent::human, 1.0, 1.5));
  ledger.steps.back().time_s = 2.0;
  ledger.steps.push_back(psi_step("untimed", Agent::cog, 1.5, 2.0));
  const LedgerReport report = evaluate_ledger(ledger);
  CHECK(report.steps[0].power_w.has_value());
  CHECK(*report.steps[0].power_w == doctest::Approx(0.25).epsilon(1e-12));
  CHECK_FALSE(report.steps[1].power_w.has_value());
  // Not every step has time: no aggregate power.
  CHECK_FALSE(report.power_w.has_value());

  // Zero-work identity step: xi omitted, not an error.
  Ledger idle;
  idle.steps.push_back(psi_step("idle", Agent::human, 0.7, 0.7));
  CHECK_FALSE(evaluate_ledger(idle).steps[0].efficiency.has_value());
}

TEST_CASE("step errors carry the step id") {
  Ledger ledger;
  ledger.steps.push_back(psi_step("ok", Agent::human, 1.0, 1.1));
  ledger.steps.push_back(psi_step("bad-psi", Agent::cog, 0.0, 1.0));
  try {
    evaluate_ledger(ledger);
    FAIL("expected a domain error");
  } catch (const MathDomainError& e) {
    CHECK(std::string(e.what()).find("bad-psi") != std::string::npos);
  }
}

TEST_CASE("ledger json parsing") {
  const auto ledger = ledger_from_json_text(R"({
    "steps": [
      {"id": "s1", "agent": "human",
       "in": {"psi": 1.0, "dikw": "data"},
       "out": {"psi": 1.2, "dikw": "information", "bloom": "understand"},
       "psi_lost": 0.1, "time_s": 2.0, "energy_j": 3.5},
      {"id": "s2", "agent": "cog",
       "in": {"category": {"dimensions": 2, "members": [[0,0],[0,1]]}},
       "out": {"psi": 1.0}}
    ]
  })");
  REQUIRE(ledger.steps.size() == 2);
  CHECK(ledger.steps[0].agent == Agent::human);
  CHECK(ledger.steps[0].in.dikw == Dikw::data);
  CHECK(ledger.steps[0].out.bloom == Bloom::understand);
  CHECK(ledger.steps[1].in.category.has_value());
  CHECK(step_gain(ledger.steps[1]) ==
        doctest::Approx(0.35914091422952255).epsilon(1e-12));

  // Error paths, each naming the offending step or field.
  CHECK_THROWS_AS(ledger_from_json_text("nope"), ValidationError);
  CHECK_THROWS_AS(ledger_from_json_text(R"({"steps": [
    {"id": "a", "agent": "robot", "in": {"psi": 1}, "out": {"psi": 1}}]})"),
                  ValidationError);
  CHECK_THROWS_AS(ledger_from_json_text(R"({"steps": [
    {"id": "a", "agent": "human", "in": {}, "out": {"psi": 1}}]})"),
                  ValidationError);
  CHECK_THROWS_AS(ledger_from_json_text(R"({"steps": [
    {"id": "a", "agent": "human",
     "in": {"psi": 1, "category": {"dimensions": 1, "members": [[0]]}},
     "out": {"psi": 1}}]})"),
                  ValidationError);
  CHECK_THROWS_AS(ledger_from_json_text(R"({"steps": [
    {"id": "a", "agent": "human", "in": {"psi": 1}, "out": {"psi": 1}},
    {"id": "a", "agent": "cog", "in": {"psi": 1}, "out": {"psi": 1}}]})"),
                  ValidationError);
  CHECK_THROWS_AS(ledger_from_json_text(R"({"steps": [
    {"id": "a", "agent": "human", "in": {"psi": 1}, "out": {"psi": 1},
     "time_s": 0}]})"),
                  ValidationError);
  CHECK_THROWS_AS(ledger_from_json_text(R"({"steps": [
    {"id": "a", "agent": "human", "in": {"psi": 1}, "out": {"psi": 1},
     "psi_lost": -0.5}]})"),
                  ValidationError);
}

} // TEST_SUITE
