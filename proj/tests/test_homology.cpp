#include <gtest/gtest.h>

#include <random>

#include "nsg/error.hpp"
#include "nsg/homology.hpp"

using namespace nsg;

namespace {

struct Case {
  std::vector<int> gens;
  std::vector<int> ideal;
  std::uint32_t p;
};

// Hand-picked cases plus seeded random ideals over a few semigroups.
std::vector<Case> corpus() {
  std::vector<Case> out = {{{4, 9, 14, 15}, {8, 9, 14}, 2},
                           {{4, 9, 14, 15}, {8, 9, 14}, 101},
                           {{5, 6, 13, 14}, {10, 11, 12}, 101},
                           {{3, 4, 5}, {3, 4, 5}, 3},
                           {{5, 7, 8, 9, 11}, {5, 7, 8, 9, 11}, 2}};
  std::mt19937 rng(17);
  const std::vector<std::vector<int>> sgs = {{3, 5, 7}, {4, 6, 7, 9}, {5, 6, 13, 14}, {4, 5, 11}, {6, 7, 8, 9, 10, 11}};
  for (int k = 0; k < 25; ++k) {
    const auto& g = sgs[static_cast<std::size_t>(k) % sgs.size()];
    auto s = NumericalSemigroup::from_generators(std::span<const int>(g));
    std::vector<int> d;
    while (d.size() < 3) {
      const int z = s.multiplicity() + static_cast<int>(rng() % 14);
      if (s.contains(z)) d.push_back(z);
    }
    auto I = MonomialIdeal::from_degrees(s, std::span<const int>(d));
    if (I.is_principal()) continue;
    out.push_back({g, I.min_gens(), k % 3 == 0 ? 2u : 101u});
  }
  return out;
}

IdealContext context(const Case& c) {
  auto s = NumericalSemigroup::from_generators(std::span<const int>(c.gens));
  return IdealContext(TruncatedRing(s, c.p), MonomialIdeal::from_degrees(s, std::span<const int>(c.ideal)));
}

std::string name(const Case& c) {
  std::string s = "<";
  for (int g : c.gens) s += std::to_string(g) + " ";
  s += "> I=";
  for (int g : c.ideal) s += std::to_string(g) + " ";
  return s + "p=" + std::to_string(c.p);
}

void expect_same(const HomologyReport& a, const HomologyReport& b, const std::string& what) {
  EXPECT_EQ(a.dims, b.dims) << what;
  EXPECT_EQ(a.killed_by_y, b.killed_by_y) << what;
  EXPECT_EQ(a.killed_by_m, b.killed_by_m) << what;
}

}  // namespace

TEST(HomologyRoutes, TorKoszulMatchesResolution) {
  for (const auto& c : corpus()) {
    auto ctx = context(c);
    auto a = tor1_self(ctx);
    expect_same(a, tor1_self_resolution(ctx), name(c));
    EXPECT_TRUE(a.stabilized) << name(c);
  }
}

TEST(HomologyRoutes, ExtDualRouteMatchesExplicit) {
  for (const auto& c : corpus()) {
    auto ctx = context(c);
    for (int i : {1, 2}) expect_same(ext_i(ctx, ExtTarget::R, i), ext_i_resolution(ctx, ExtTarget::R, i), name(c));
    expect_same(ext_i(ctx, ExtTarget::CanonicalDual, 1), ext_i_resolution(ctx, ExtTarget::CanonicalDual, 1), name(c));
  }
}

TEST(HomologyRoutes, WedgeUnionFindMatchesElimination) {
  for (const auto& c : corpus()) {
    auto ctx = context(c);
    expect_same(wedge2(ctx), wedge2_generic(ctx), name(c));
  }
}

TEST(HomologyRoutes, SyzygeticSequenceIsExact) {
  for (const auto& c : corpus()) {
    auto ctx = context(c);
    auto tor = tor1_self(ctx), del = delta1(ctx), quo = b1_mod_iz1(ctx);
    std::set<int> degrees;
    for (const auto* r : {&tor, &del, &quo})
      for (auto [d, v] : r->dims) degrees.insert(d);
    for (int d : degrees) {
      auto at = [d](const HomologyReport& r) {
        auto it = r.dims.find(d);
        return it == r.dims.end() ? 0 : it->second;
      };
      EXPECT_EQ(at(tor), at(del) + at(quo)) << name(c) << " degree " << d;
    }
  }
}

TEST(HomologyRoutes, MatlisDualityReflectsDegrees) {
  for (const auto& c : corpus()) {
    auto ctx = context(c);
    EXPECT_TRUE(matlis_consistency(ctx)) << name(c);
    auto tor = tor1_self(ctx);
    auto ext = ext_i(ctx, ExtTarget::CanonicalDual, 1);
    if (tor.dims.empty()) {
      EXPECT_TRUE(ext.dims.empty());
      continue;
    }
    const int s = tor.dims.begin()->first + ext.dims.rbegin()->first;
    DimsByDegree mirrored;
    for (auto [d, v] : ext.dims) mirrored[s - d] = v;
    EXPECT_EQ(mirrored, tor.dims) << name(c);
  }
}

TEST(HomologyRoutes, TraceOfPresentationMatchesColonTrace) {
  for (const auto& c : corpus()) {
    auto ctx = context(c);
    auto pres = GradedModule::of_ideal(ctx.ring(), ctx.ideal()).relations;
    EXPECT_EQ(trace_of_module(ctx.ring(), pres), trace_ideal(ctx.ideal())) << name(c);
  }
}

TEST(HomologyValues, IntermediateTypeThreeExample) {
  auto ctx = context({{4, 9, 14, 15}, {8, 9, 14}, 2});
  auto del = delta1(ctx);
  EXPECT_EQ(del.total_dim, 2);
  EXPECT_TRUE(del.killed_by_m);
  auto tor = tor1_self(ctx);
  EXPECT_EQ(tor.total_dim, 6);
  EXPECT_EQ(tor.dims, (DimsByDegree{{17, 1}, {21, 1}, {22, 2}, {23, 1}, {28, 1}}));
  auto w = wedge2(ctx);
  EXPECT_EQ(w.total_dim, 4);
  EXPECT_FALSE(w.killed_by_m);
  auto b = theorem38_battery(ctx);
  EXPECT_TRUE(b.conclusive);
  EXPECT_TRUE(b.agreement);
  for (const auto& v : b.conditions) EXPECT_EQ(v, std::optional<bool>(false));
}

TEST(HomologyValues, CounterexampleExtIsKilledByM) {
  auto ctx = context({{5, 6, 13, 14}, {10, 11, 12}, 101});
  auto ext = ext_i(ctx, ExtTarget::R, 1);
  EXPECT_EQ(ext.total_dim, 5);
  EXPECT_TRUE(ext.killed_by_m);
  auto q = question12_check(ctx.semigroup(), 101);
  EXPECT_EQ(q.status, Q12Status::Certified);
  EXPECT_TRUE(q.is_counterexample);
  EXPECT_EQ(q.tail.certificate_index, 1);
}

TEST(HomologyValues, MaximalIdealOfMinimalMultiplicity) {
  auto ctx = context({{3, 4, 5}, {3, 4, 5}, 101});
  auto b = theorem38_battery(ctx);
  EXPECT_TRUE(b.conclusive);
  for (const auto& v : b.conditions) EXPECT_EQ(v, std::optional<bool>(true));
  EXPECT_TRUE(b.z1.iso);
  auto q = question12_check(NumericalSemigroup::from_generators({3, 4}), 101);
  EXPECT_EQ(q.status, Q12Status::Vacuous);
}

TEST(HomologyValues, Errors) {
  auto s = NumericalSemigroup::from_generators({3, 4, 5});
  IdealContext principal(TruncatedRing(s, 101), MonomialIdeal::principal(s, 3));
  EXPECT_THROW(wedge2(principal), Error);
  auto t = NumericalSemigroup::from_generators({5, 6, 13, 14});
  EXPECT_THROW(IdealContext(TruncatedRing(t, 101), MonomialIdeal::maximal(s)), Error);
  IdealContext not_mm(TruncatedRing(t, 101), MonomialIdeal::maximal(t));
  EXPECT_THROW(theorem38_battery(not_mm), Error);
  EXPECT_THROW(ext_i(not_mm, ExtTarget::R, 0), Error);
  IdealContext fractional(TruncatedRing(s, 101), MonomialIdeal::from_degrees(s, {1, 2}));
  EXPECT_THROW(tor1_self(fractional), Error);
  EXPECT_THROW(tor1_self_resolution(fractional), Error);
  DenseMatrix one(1, 1);
  one(0, 0) = 1;
  EXPECT_THROW(trace_of_module(TruncatedRing(s, 101), GradedMatrix({0}, {0}, one)), Error);
}
