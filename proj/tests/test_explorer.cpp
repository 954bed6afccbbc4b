#include <gtest/gtest.h>

#include <sstream>

#include "nsg/error.hpp"
#include "nsg/explorer.hpp"

using namespace nsg;

TEST(Scenarios, AllPassAtTheirDefaultFields) {
  for (const auto& n : scenario_names()) {
    auto r = run_scenario(n);
    EXPECT_TRUE(r.passed()) << to_json(r).dump(2);
    EXPECT_FALSE(r.assertions.empty());
  }
  EXPECT_THROW(run_scenario("no-such-scenario"), Error);
}

TEST(Scenarios, CounterexampleHoldsInSeveralCharacteristics) {
  for (std::uint32_t p : {2u, 3u, 101u, 7919u}) {
    ScenarioOptions opt;
    opt.prime = p;
    auto r = run_scenario("section-5", opt);
    EXPECT_TRUE(r.passed()) << "p = " << p << "\n" << to_json(r).dump(2);
  }
}

TEST(Scenarios, BakedDataHasExpectedShapes) {
  auto d = section5_data();
  EXPECT_EQ(d["S"]["col_shifts"].size(), 8u);
  EXPECT_EQ(d["T"]["col_shifts"].size(), 24u);
  EXPECT_EQ(d["P"]["col_shifts"].size(), 8u);
  EXPECT_EQ(bundled_corollary_semigroups().size(), 20u);
}

TEST(Report, MatrixJsonRoundTrip) {
  PrimeField f(101);
  auto s = NumericalSemigroup::from_generators({5, 6, 13, 14});
  auto m = syzygy(TruncatedRing(s, 101), GradedMatrix::generator_row(MonomialIdeal::from_degrees(s, {10, 11, 12})));
  auto j = to_json(m, f);
  EXPECT_EQ(matrix_from_json(j, f), m);
  j["entries"][0][2][0][0] = 99;
  EXPECT_THROW(matrix_from_json(j, f), Error);
}

TEST(Report, DocumentsForCommonInvocations) {
  ReportOptions opt;
  auto a = cmd_report({2, 3}, opt);
  EXPECT_EQ(a.doc["gorenstein"], true);
  EXPECT_EQ(a.status, 0);

  opt.canonical = true;
  opt.battery = true;
  opt.prime = 2;
  auto b = cmd_report({4, 9, 14, 15}, opt);
  EXPECT_EQ(b.doc["battery"]["pattern"], std::string(16, 'F'));
  EXPECT_EQ(b.doc["battery"]["agreement"], true);

  ReportOptions q;
  q.question12 = true;
  auto c = cmd_report({5, 6, 13, 14}, q);
  EXPECT_EQ(c.doc["question12"]["is_counterexample"], true);
  EXPECT_EQ(c.doc["question12"]["status"], "certified");

  // Identical inputs give byte-identical documents.
  EXPECT_EQ(cmd_report({5, 6, 13, 14}, q).doc.dump(), c.doc.dump());
}

TEST(Scan, RecordsAreCompleteOrderedAndDeterministic) {
  ScanConfig cfg;
  cfg.bound = EnumerationBound::genus(8);
  cfg.checks = {ScanCheck::Classify, ScanCheck::Question12};
  std::ostringstream one, two;
  auto s1 = run_scan(cfg, &one);
  cfg.workers = 3;
  auto s2 = run_scan(cfg, &two);
  EXPECT_EQ(one.str(), two.str());
  EXPECT_TRUE(s1.ok()) << format_summary(s1);
  EXPECT_EQ(s1.records, s1.expected_records);
  EXPECT_EQ(s1.records, count_semigroups(cfg.bound));
  std::istringstream lines(one.str());
  std::string line;
  long long n = 0;
  int last_genus = -1;
  while (std::getline(lines, line)) {
    auto j = Json::parse(line);
    EXPECT_GE(j["genus"].get<int>(), last_genus);
    last_genus = j["genus"];
    ++n;
  }
  EXPECT_EQ(n, s1.records);
}

TEST(Scan, FlagsTheCounterexample) {
  ScanConfig cfg;
  cfg.bound = EnumerationBound::frobenius(9);
  cfg.multiplicity = 5;
  cfg.checks = {ScanCheck::Question12};
  auto s = run_scan(cfg, nullptr);
  ASSERT_EQ(s.counterexamples.size(), 1u);
  EXPECT_EQ(s.counterexamples[0], (std::vector<int>{5, 6, 13, 14}));
  EXPECT_NE(format_summary(s).find("COUNTEREXAMPLE <5,6,13,14>"), std::string::npos);
}

TEST(Scan, BatteryModeOnSmallRange) {
  ScanConfig cfg;
  cfg.bound = EnumerationBound::frobenius(11);
  cfg.minimal_multiplicity_only = true;
  cfg.checks = {ScanCheck::Battery};
  cfg.random_ideals = 2;
  auto s = run_scan(cfg, nullptr);
  EXPECT_TRUE(s.ok()) << format_summary(s);
  EXPECT_GT(s.battery_runs, 0);
  EXPECT_EQ(s.battery_disagreements, 0);
  EXPECT_GT(s.checks["matlis_consistency"].runs, 0);
}

TEST(Scan, RandomIdealsAreSeededAndNonprincipal) {
  auto s = NumericalSemigroup::from_generators({4, 6, 7, 9});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto a = random_monomial_ideal(s, seed);
    EXPECT_EQ(a, random_monomial_ideal(s, seed));
    EXPECT_FALSE(a.is_principal());
    EXPECT_TRUE(a.inside_ring());
  }
  auto ideals = scan_ideals(s, 3, 1);
  EXPECT_EQ(ideals.size(), 5u);
  EXPECT_EQ(ideals[0].first, "m");
}

TEST(Scan, TallyKeepsFirstFailures) {
  CheckTally t;
  for (int i = 0; i < 10; ++i) t.record(i % 2 == 0, "case " + std::to_string(i));
  EXPECT_EQ(t.runs, 10);
  EXPECT_EQ(t.failures, 5);
  EXPECT_EQ(t.first_failures.size(), 5u);
  EXPECT_EQ(t.first_failures.front(), "case 1");
}
