#include <gtest/gtest.h>

#include <random>

#include "nsg/error.hpp"
#include "nsg/ideal.hpp"

using namespace nsg;

namespace {

constexpr int kLo = -60;
constexpr int kHi = 160;

// Explicit membership table on [kLo, kHi]; all ideals in these tests are full well before kHi.
struct Table {
  std::vector<char> in;
  bool has(int z) const { return z >= kHi || (z >= kLo && in[static_cast<std::size_t>(z - kLo)]); }
};

Table table(const MonomialIdeal& i) {
  Table t{std::vector<char>(kHi - kLo + 1)};
  for (int z = kLo; z <= kHi; ++z) t.in[static_cast<std::size_t>(z - kLo)] = i.contains(z);
  return t;
}

void expect_matches(const MonomialIdeal& got, const std::function<bool(int)>& want, int from, int to) {
  for (int z = from; z <= to; ++z) ASSERT_EQ(got.contains(z), want(z)) << "degree " << z << " in " << got.to_string();
}

MonomialIdeal random_ideal(const NumericalSemigroup& s, std::mt19937& rng, int offset) {
  std::vector<int> d;
  const int k = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < k; ++i) d.push_back(offset + static_cast<int>(rng() % 25));
  return MonomialIdeal::from_degrees(s, std::span<const int>(d));
}

}  // namespace

TEST(Ideal, ArithmeticMatchesSetOracle) {
  std::mt19937 rng(5);
  const std::vector<std::vector<int>> sgs = {{3, 5, 7}, {4, 9, 14, 15}, {5, 6, 13, 14}, {6, 7, 15}, {2, 9}};
  for (const auto& g : sgs) {
    auto s = NumericalSemigroup::from_generators(std::span<const int>(g));
    for (int trial = 0; trial < 20; ++trial) {
      auto a = random_ideal(s, rng, static_cast<int>(rng() % 7) - 3);
      auto b = random_ideal(s, rng, static_cast<int>(rng() % 7) - 3);
      auto ta = table(a), tb = table(b);
      expect_matches(sum(a, b), [&](int z) { return ta.has(z) || tb.has(z); }, -10, 80);
      expect_matches(intersection(a, b), [&](int z) { return ta.has(z) && tb.has(z); }, -10, 80);
      expect_matches(product(a, b), [&](int z) {
        for (int x = kLo; x <= z - kLo; ++x)
          if (ta.has(x) && tb.has(z - x)) return true;
        return false;
      }, -10, 80);
      expect_matches(colon(b, a), [&](int z) {
        for (int x = a.min_degree(); x <= 100; ++x)
          if (ta.has(x) && !tb.has(z + x)) return false;
        return true;
      }, -40, 60);
      expect_matches(shift(a, 4), [&](int z) { return ta.has(z - 4); }, -10, 80);
    }
  }
}

TEST(Ideal, TraceMatchesInverseProductOracle) {
  std::mt19937 rng(9);
  for (const auto& g : std::vector<std::vector<int>>{{3, 5, 7}, {4, 9, 14, 15}, {5, 6, 13, 14}, {5, 8, 11}}) {
    auto s = NumericalSemigroup::from_generators(std::span<const int>(g));
    for (int trial = 0; trial < 20; ++trial) {
      auto i = random_ideal(s, rng, 0);
      auto ti = table(i);
      // tr(I) = I (R : I), with (R : I) found by scanning candidate degrees.
      std::vector<int> inv;
      for (int b = -40; b <= 60; ++b) {
        bool ok = true;
        for (int x = i.min_degree(); x <= 100 && ok; ++x)
          if (ti.has(x) && !s.contains(b + x)) ok = false;
        if (ok) inv.push_back(b);
      }
      auto tr = trace_ideal(i);
      expect_matches(tr, [&](int z) {
        for (int b : inv)
          if (ti.has(z - b)) return true;
        return false;
      }, 0, 60);
      for (int x : i.min_gens()) EXPECT_EQ(trace_via_single_colon(i, x), tr);
    }
  }
}

TEST(Ideal, CanonicalAndTraceOfWorkedExamples) {
  auto s = NumericalSemigroup::from_generators({5, 6, 13, 14});
  auto w = canonical_ideal(s);
  EXPECT_EQ(w.ideal.min_gens(), (std::vector<int>{10, 11, 12}));
  EXPECT_EQ(w.shift, 10);
  EXPECT_EQ(trace_ideal(w.ideal), conductor_ideal(s));
  auto c = classify(s);
  EXPECT_EQ(c.category, GorensteinCategory::FarFlung);
  EXPECT_FALSE(c.nearly);

  auto t = NumericalSemigroup::from_generators({4, 9, 14, 15});
  auto ct = classify(t);
  EXPECT_EQ(ct.canonical.ideal.min_gens(), (std::vector<int>{8, 9, 14}));
  EXPECT_EQ(ct.trace.min_gens(), (std::vector<int>{8, 9, 14, 15}));
  EXPECT_EQ(ct.category, GorensteinCategory::Intermediate);
}

TEST(Ideal, CanonicalIdealMatchesDefinition) {
  for (const auto& s : enumerate_semigroups(EnumerationBound::frobenius(14))) {
    if (s.is_dvr()) continue;
    auto w = canonical_ideal(s);
    expect_matches(w.fractional, [&](int z) { return !s.contains(s.frobenius() - z); }, -20, 40);
    EXPECT_TRUE(w.ideal.inside_ring());
    EXPECT_FALSE(shift(w.fractional, w.shift - 1).inside_ring());
    EXPECT_EQ(w.ideal.mu(), s.type());
    auto c = classify(s);
    EXPECT_EQ(c.gorenstein, s.is_symmetric());
    EXPECT_EQ(c.nearly, MonomialIdeal::maximal(s).subset_of(c.trace));
    if (c.almost) EXPECT_TRUE(c.nearly);
  }
}

TEST(Ideal, MaximalIdealUlrichIffMinimalMultiplicity) {
  for (const auto& s : enumerate_semigroups(EnumerationBound::frobenius(12))) {
    if (s.is_dvr()) continue;
    EXPECT_EQ(is_ulrich_ideal(MonomialIdeal::maximal(s)), s.has_minimal_multiplicity());
  }
}

TEST(Ideal, SemigroupConditionsAndErrors) {
  auto s = NumericalSemigroup::from_generators({3, 4, 5});
  auto m = MonomialIdeal::maximal(s);
  auto c = theorem38_semigroup_report(m);
  EXPECT_TRUE(c.c1_colon_is_m && c.c2_trace_is_m && c.c8_y_in_colon && c.c14_y_in_trace &&
              c.c15_iso_ideal_containing_y);
  EXPECT_THROW(theorem38_semigroup_report(MonomialIdeal::principal(s, 3)), Error);
  EXPECT_THROW(theorem38_semigroup_report(MonomialIdeal::from_degrees(s, {-1, 0})), Error);
  auto t = NumericalSemigroup::from_generators({5, 6, 13, 14});
  EXPECT_THROW(theorem38_semigroup_report(MonomialIdeal::maximal(t)), Error);
  EXPECT_THROW(MonomialIdeal::from_degrees(s, std::span<const int>()), Error);
  EXPECT_THROW(trace_via_single_colon(m, 7), Error);
  EXPECT_THROW(classify(NumericalSemigroup::from_generators({1})), Error);
}
