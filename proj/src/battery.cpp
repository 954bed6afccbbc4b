#include <algorithm>
#include <string>

#include "nsg/error.hpp"
#include "nsg/homology.hpp"

namespace nsg {

namespace {

void require_battery_hypotheses(const MonomialIdeal& i) {
  if (!i.semigroup().has_minimal_multiplicity())
    throw Error(ErrorKind::NotMinimalMultiplicity, "semigroup lacks minimal multiplicity");
  if (!i.inside_ring()) throw Error(ErrorKind::NotInsideRing, i.to_string() + " is not inside R");
  if (i.is_principal()) throw Error(ErrorKind::PrincipalIdeal, i.to_string() + " is principal");
}

}  // namespace

Z1IsoCertificate check_Z1_iso_shifted_m(IdealContext& ctx) {
  const auto& i = ctx.ideal();
  require_battery_hypotheses(i);
  const auto& s = ctx.semigroup();
  const auto& f = ctx.field();
  const auto& g = ctx.gens();
  const std::size_t mu = g.size();
  const auto m = MonomialIdeal::maximal(s);
  Z1IsoCertificate out;

  out.colons_are_m = true;
  for (std::size_t j = 1; j < mu; ++j)
    out.colons_are_m = out.colons_are_m &&
                       ring_colon(MonomialIdeal::principal(s, g[0]), MonomialIdeal::principal(s, g[j])) == m;

  auto z1 = [&](int n) {
    auto a = active_columns(s, g, n);
    Subspace sp(f, mu);
    for (std::size_t k = 1; k < a.size(); ++k) {
      Vec v(mu, 0);
      v[a[k]] = 1;
      v[a[0]] = f.neg(1);
      sp.insert(std::move(v));
    }
    return sp;
  };

  // Images a e_j - (a x_j / x_1) e_1 of the generators t^a of m(-|x_j|), grouped by degree.
  std::map<int, std::vector<std::size_t>> images;
  std::vector<int> expected_degrees;
  for (std::size_t j = 1; j < mu; ++j)
    for (int a : s.generators()) {
      images[a + g[j]].push_back(j);
      expected_degrees.push_back(a + g[j]);
    }
  out.images_independent = true;
  for (const auto& [d, js] : images) {
    Subspace acc(f, mu);
    for (int a : s.generators()) acc.add(z1(d - a));
    for (auto j : js) {
      if (!s.contains(d - g[0])) {
        out.images_independent = false;  // not even a cycle: a is outside (x_1 : x_j)
        break;
      }
      Vec v(mu, 0);
      v[j] = 1;
      v[0] = f.neg(1);
      if (!acc.insert(std::move(v))) out.images_independent = false;
    }
  }

  out.hilbert_equal = true;
  const int top = g.back() + s.conductor() + s.max_generator();
  for (int n = g[0]; n <= top && out.hilbert_equal; ++n) {
    const int lhs = static_cast<int>(z1(n).dim());
    int rhs = 0;
    for (std::size_t j = 1; j < mu; ++j) rhs += (n - g[j] > 0 && s.contains(n - g[j])) ? 1 : 0;
    out.hilbert_equal = lhs == rhs;
  }

  std::vector<int> got = ctx.differential(0).col_shifts();
  std::sort(got.begin(), got.end());
  std::sort(expected_degrees.begin(), expected_degrees.end());
  out.generator_degrees_equal = got == expected_degrees;

  out.iso = out.colons_are_m && out.images_independent && out.hilbert_equal;
  out.refuted = !out.hilbert_equal || !out.generator_degrees_equal;
  return out;
}

ExtTailResult ext_tail(IdealContext& ctx, ExtTarget target, Multiplier mult, int depth) {
  if (depth < 1) throw Error(ErrorKind::InvalidInput, "Ext depth must be positive");
  const auto& s = ctx.semigroup();
  const auto m = MonomialIdeal::maximal(s);
  ExtTailResult out;
  for (int j = 0; j <= depth; ++j) {
    // tr(Omega^j) kills Ext^i(Omega^j, -) = Ext^{i+j}(I, -) for i >= 1.
    const GradedMatrix& pres = ctx.differential(j);
    MonomialIdeal tr = pres.cols() == 0 ? MonomialIdeal::unit(s) : trace_of_module(ctx.ring(), pres);
    out.syzygy_traces.push_back(tr);
    const bool enough = mult == Multiplier::Y ? tr.contains(s.multiplicity()) : m.subset_of(tr);
    if (enough) {
      out.killed = true;
      out.certificate_index = j;
      return out;
    }
    if (j == depth) break;
    auto rep = ext_i(ctx, target, j + 1);
    out.reports.push_back(rep);
    const bool killed = mult == Multiplier::Y ? rep.killed_by_y : rep.killed_by_m;
    if (!killed) {
      out.killed = false;
      out.refuting_index = j + 1;
      return out;
    }
  }
  return out;
}

Theorem38Battery theorem38_battery(IdealContext& ctx, int ext_depth) {
  const auto& i = ctx.ideal();
  require_battery_hypotheses(i);
  Theorem38Battery b;
  b.semigroup = theorem38_semigroup_report(i);
  b.colon_trace = trace_ideal(i);
  b.presentation_trace = trace_of_module(ctx.ring(), ctx.differential(0));
  b.trace_routes_agree = *b.colon_trace == *b.presentation_trace;
  b.ext1_dual = ext_i(ctx, ExtTarget::CanonicalDual, 1);
  b.tor1 = tor1_self(ctx);
  b.wedge = wedge2(ctx);
  b.z1 = check_Z1_iso_shifted_m(ctx);
  b.tail_m = ext_tail(ctx, ExtTarget::CanonicalDual, Multiplier::AllOfM, ext_depth);
  b.tail_y = ext_tail(ctx, ExtTarget::CanonicalDual, Multiplier::Y, ext_depth);

  auto& c = b.conditions;
  c[0] = b.semigroup.c1_colon_is_m;
  c[1] = b.semigroup.c2_trace_is_m;
  c[2] = b.tail_m.killed;
  c[3] = b.ext1_dual.killed_by_m;
  c[4] = b.tor1.killed_by_m;
  c[5] = check_yB1_in_IZ1(ctx, Multiplier::AllOfM);
  c[6] = check_yB1_in_IZ1(ctx, Multiplier::Y);
  c[7] = b.semigroup.c8_y_in_colon;
  c[8] = b.wedge.killed_by_m;
  c[9] = b.tail_y.killed;
  c[10] = b.ext1_dual.killed_by_y;
  c[11] = b.tor1.killed_by_y;
  c[12] = b.wedge.killed_by_y;
  c[13] = b.semigroup.c14_y_in_trace;
  c[14] = b.semigroup.c15_iso_ideal_containing_y;
  if (b.z1.iso) c[15] = true;
  else if (b.z1.refuted) c[15] = false;

  b.conclusive = std::all_of(c.begin(), c.end(), [](const auto& v) { return v.has_value(); });
  std::optional<bool> first;
  b.agreement = b.trace_routes_agree;
  for (const auto& v : c) {
    if (!v) continue;
    if (!first) first = *v;
    else if (*first != *v) b.agreement = false;
  }
  return b;
}

std::string_view to_string(Q12Status s) {
  switch (s) {
    case Q12Status::Vacuous: return "vacuous";
    case Q12Status::Certified: return "certified";
    case Q12Status::Refuted: return "refuted";
    case Q12Status::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

Question12Result question12_check(const NumericalSemigroup& s, std::uint32_t p, int depth,
                                  std::optional<int> cap) {
  Question12Result out;
  if (s.is_dvr() || s.type() == 1) {
    out.status = Q12Status::Vacuous;
    out.m_kills_ext = true;
    out.nearly_gorenstein = true;
    if (!s.is_dvr()) out.classification = classify(s);
    return out;
  }
  out.classification = classify(s);
  out.nearly_gorenstein = out.classification->nearly;
  IdealContext ctx(TruncatedRing(s, p, cap), out.classification->canonical.ideal);
  out.tail = ext_tail(ctx, ExtTarget::R, Multiplier::AllOfM, depth);
  out.m_kills_ext = out.tail.killed;
  if (!out.tail.killed) out.status = Q12Status::Inconclusive;
  else out.status = *out.tail.killed ? Q12Status::Certified : Q12Status::Refuted;
  out.is_counterexample = out.tail.killed.value_or(false) && !out.nearly_gorenstein;
  return out;
}

}  // namespace nsg
