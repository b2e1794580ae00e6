#include <gtest/gtest.h>

#include <algorithm>

#include "deltaring/dsl.hpp"
#include "deltaring/errors.hpp"
#include "deltaring/harness.hpp"
#include "deltaring/report_json.hpp"
#include "deltaring/subsets.hpp"

using namespace deltaring;

namespace {

std::vector<RingExpr> exprs(std::initializer_list<const char*> names) {
  std::vector<RingExpr> out;
  for (const char* n : names) out.push_back(parse_ring_expr(n));
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

TEST(Harness, Registry) {
  std::set<std::string> ids;
  for (const auto& c : theorem_checks()) {
    EXPECT_TRUE(ids.insert(c.id).second);
    EXPECT_FALSE(c.statement.empty());
  }
  for (const char* id : {"TDELTA", "T2.1", "T2.2", "T2.4", "T2.8", "T2.9", "T2.11", "T3.1", "T3.2", "T3.5/3.6", "T3.7", "T3.8",
                         "T3.13/3.14", "T3.15", "T3.16", "T3.17", "T3.18", "T3.26", "T3.27", "T3.28", "T4.5", "T4.5x",
                         "TDT", "T4.9", "T4.10", "T4.11", "TG1", "TG2", "TG3", "TL4.14"})
    EXPECT_TRUE(ids.count(id)) << id;
  EXPECT_EQ(find_check("T3.6").id, "T3.5/3.6");
  EXPECT_EQ(find_check("T3.5").id, "T3.5/3.6");
  EXPECT_EQ(find_check("T3.14").id, "T3.13/3.14");
  EXPECT_THROW(find_check("bogus-id"), UnknownCheckId);
  EXPECT_THROW(run_check("T9.9", {}), UnknownCheckId);
}

TEST(Harness, T28OnCatalogPasses) {
  const CheckOutcome o = run_check_on_catalog("T2.8");
  EXPECT_TRUE(o.verdict);
  EXPECT_GT(o.scope_size, 200u);
  EXPECT_TRUE(o.counterexamples.empty());
}

TEST(Harness, T38WitnessOnM2Z2) {
  const CheckOutcome o = run_check("T3.8", exprs({"M(2,Z2)"}));
  EXPECT_TRUE(o.verdict);
  EXPECT_EQ(o.scope_size, 1u);
  ASSERT_EQ(o.notes.size(), 1u);
  EXPECT_NE(o.notes[0].find("[[0,1],[1,1]]"), std::string::npos);
}

TEST(Harness, T316OnZ4) {
  const CheckOutcome o = run_check("T3.16", exprs({"Z4"}));
  EXPECT_TRUE(o.verdict);
  EXPECT_EQ(o.scope_size, 1u);
}

TEST(Harness, EmptyRingSetIsVacuousPassWithWarning) {
  const CheckOutcome o = run_check("T2.8", {});
  EXPECT_TRUE(o.verdict);
  EXPECT_EQ(o.scope_size, 0u);
  ASSERT_EQ(o.warnings.size(), 1u);
  // A non-empty set outside the check's filter is also vacuous.
  const CheckOutcome p = run_check("T3.1", exprs({"Z4", "M(2,Z2)"}));
  EXPECT_EQ(p.scope_size, 0u);
  EXPECT_FALSE(p.warnings.empty());
}

TEST(Harness, HypothesisFilterCountsOnlyApplicableRings) {
  // Only rings verified regular count towards T3.13/3.14.
  const CheckOutcome o = run_check("T3.13/3.14", exprs({"Z6", "Z4", "GF(4)", "Z8"}));
  EXPECT_EQ(o.scope_size, 2u);
  // TG2 needs p in J(R) and R 2-delta-u: Z2C2 yes, Z3C2 no (2 is a unit in Z3).
  const CheckOutcome g = run_check("TG2", exprs({"GR(Z2,C2)", "GR(Z3,C2)", "GR(Z9,C3)"}));
  EXPECT_EQ(g.scope_size, 2u);
  EXPECT_TRUE(g.verdict);
}

TEST(Harness, RunAllPassesOnDefaultCatalog) {
  const RunSummary s = run_all();
  EXPECT_TRUE(s.all_passed());
  EXPECT_EQ(s.outcomes.size(), theorem_checks().size());
  for (const auto& o : s.outcomes) {
    EXPECT_TRUE(o.verdict) << o.check_id;
    EXPECT_FALSE(o.runtime_ms.has_value());
    EXPECT_GT(o.scope_size, 0u) << o.check_id;
  }
}

// Corrupting Delta (drop the largest nonzero element whenever |Delta| > 1)
// must make the oracle check fail and name the rings.
TEST(Harness, T32FactorRings) {
  const CheckOutcome o = run_check("T3.2", exprs({"Z12", "Z7", "T(2,Z3)"}));
  EXPECT_TRUE(o.verdict);
  EXPECT_EQ(o.scope_size, 2u);  // Z7 is not 2-delta-u, so the hypothesis fails

  // Z9 made to look non-2-delta-u; it is the factor Z27/9Z27.
  HarnessConfig config;
  config.overrides.delta = [](const FiniteRing& r) {
    return r.order() == 9 ? ElementSet(9, {0}) : delta_set(r);
  };
  const CheckOutcome bad = run_check("T3.2", exprs({"Z27"}), config);
  EXPECT_FALSE(bad.verdict);
  ASSERT_EQ(bad.counterexamples.size(), 1u);
  EXPECT_EQ(bad.counterexamples[0].ring, "Z27");
}

TEST(Harness, CorruptedDeltaIsCaught) {
  HarnessConfig config;
  config.overrides.delta = [](const FiniteRing& r) {
    ElementSet d = delta_set(r);
    const auto m = d.members();
    if (m.size() > 1) d.erase(m.back());
    return d;
  };
  const CheckOutcome o = run_check("TDELTA", exprs({"Z2", "Z4", "Z6", "Z8"}), config);
  EXPECT_FALSE(o.verdict);
  ASSERT_EQ(o.counterexamples.size(), 2u);
  EXPECT_EQ(o.counterexamples[0].ring, "Z4");
  EXPECT_EQ(o.counterexamples[1].ring, "Z8");
  EXPECT_FALSE(o.counterexamples[0].witness.empty());
}

TEST(Harness, ParallelRunMatchesSerial) {
  HarnessConfig one;
  HarnessConfig four;
  four.threads = 4;
  for (const char* id : {"T2.8", "T3.5/3.6", "T3.16"}) {
    const std::string a = outcome_to_json(run_check_on_catalog(id, one)).dump();
    const std::string b = outcome_to_json(run_check_on_catalog(id, four)).dump();
    EXPECT_EQ(a, b) << id;
  }
}

TEST(Harness, ReportsAreByteIdenticalAcrossRuns) {
  const std::string first = verify_json(run_all().outcomes).dump();
  clear_build_cache();
  const std::string second = verify_json(run_all().outcomes).dump();
  EXPECT_EQ(first, second);
}

TEST(Harness, OutcomeJsonShape) {
  HarnessConfig timed;
  timed.timing = true;
  const Json j = outcome_to_json(run_check("T3.8", exprs({"M(2,Z3)"}), timed));
  for (const char* key : {"check_id", "statement", "scope_size", "verdict", "counterexamples", "runtime_ms"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j["runtime_ms"].is_number());
  EXPECT_EQ(j["verdict"], "pass");
}

TEST(Search, Examples) {
  const auto sep = search_classes({"2-delta-u"}, {"delta-u"}, 1024);
  EXPECT_TRUE(contains(sep, "Z3"));
  EXPECT_TRUE(search_classes({"delta-u"}, {"uj"}, 64).empty());
  EXPECT_TRUE(search_classes({"delta-u"}, {"uj"}, 64, true).empty());
  // Sorted by order.
  std::size_t last = 0;
  for (const auto& label : sep) {
    const std::size_t n = build_ring(label)->order();
    EXPECT_GE(n, last);
    last = n;
  }
  EXPECT_THROW(search_classes({"nope"}, {}, 16), UnknownClass);
}

TEST(Search, ExtendedAddsIntegersAndPairs) {
  const auto base = search_classes({"2-delta-u"}, {}, 200);
  const auto ext = search_classes({"2-delta-u"}, {}, 200, true);
  EXPECT_FALSE(contains(base, "Z144"));
  EXPECT_TRUE(contains(ext, "Z144"));
  EXPECT_TRUE(contains(ext, "Prod(Z6,Z12)"));
}
