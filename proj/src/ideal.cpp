#include "nsg/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "nsg/error.hpp"

namespace nsg {

namespace {

void same_semigroup(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.semigroup() != b.semigroup())
    throw Error(ErrorKind::MixedSemigroups, "ideals over different semigroups");
}

}  // namespace

MonomialIdeal::MonomialIdeal(NumericalSemigroup s, int lo, int full, std::vector<char> bits)
    : s_(std::move(s)) {
  // Normalize: lo_ is the least member, full_ one past the last non-member.
  std::size_t first = 0;
  while (first < bits.size() && !bits[first]) ++first;
  std::size_t last = bits.size();
  while (last > first && bits[last - 1]) --last;
  lo_ = lo + static_cast<int>(first);
  full_ = lo + static_cast<int>(last);
  if (first == bits.size()) full_ = lo_ = full;
  bits_.assign(bits.begin() + static_cast<std::ptrdiff_t>(first),
               bits.begin() + static_cast<std::ptrdiff_t>(std::max(first, last)));
  // A member is a minimal generator when no member sits one semigroup generator below it.
  const auto& sg = s_.generators();
  const int top = full_ + s_.max_generator();
  for (int z = lo_; z < top; ++z) {
    if (!contains(z)) continue;
    bool reached = std::any_of(sg.begin(), sg.end(), [&](int a) { return contains(z - a); });
    if (!reached) gens_.push_back(z);
  }
}

MonomialIdeal MonomialIdeal::from_degrees(const NumericalSemigroup& s, std::initializer_list<int> gens) {
  std::vector<int> v(gens);
  return from_degrees(s, std::span<const int>(v));
}

MonomialIdeal MonomialIdeal::from_degrees(const NumericalSemigroup& s, std::span<const int> gens) {
  if (gens.empty()) throw Error(ErrorKind::EmptyGenerators, "ideal needs at least one generator");
  const int lo = *std::min_element(gens.begin(), gens.end());
  return from_predicate(s, lo, lo + s.conductor(), [&](int z) {
    return std::any_of(gens.begin(), gens.end(), [&](int g) { return s.contains(z - g); });
  });
}

MonomialIdeal MonomialIdeal::principal(const NumericalSemigroup& s, int degree) {
  return from_predicate(s, degree, degree + s.conductor(),
                        [&](int z) { return s.contains(z - degree); });
}

MonomialIdeal MonomialIdeal::maximal(const NumericalSemigroup& s) {
  return from_degrees(s, std::span<const int>(s.generators()));
}

bool MonomialIdeal::inside_ring() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [&](int g) { return s_.contains(g); });
}

bool MonomialIdeal::subset_of(const MonomialIdeal& o) const {
  same_semigroup(*this, o);
  return std::all_of(gens_.begin(), gens_.end(), [&](int g) { return o.contains(g); });
}

bool MonomialIdeal::operator==(const MonomialIdeal& o) const noexcept {
  return s_ == o.s_ && lo_ == o.lo_ && full_ == o.full_ && bits_ == o.bits_;
}

std::string MonomialIdeal::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < gens_.size(); ++k) os << (k ? "," : "") << "t^" << gens_[k];
  os << ")";
  return os.str();
}

MonomialIdeal colon(const MonomialIdeal& j, const MonomialIdeal& i) {
  same_semigroup(j, i);
  const auto& g = i.min_gens();
  const int lo = j.min_degree() - i.min_degree();
  const int hi = j.full_from() - i.min_degree();
  return MonomialIdeal::from_predicate(j.semigroup(), lo, hi, [&](int z) {
    return std::all_of(g.begin(), g.end(), [&](int x) { return j.contains(z + x); });
  });
}

MonomialIdeal ring_colon(const MonomialIdeal& j, const MonomialIdeal& i) {
  return intersection(colon(j, i), MonomialIdeal::unit(j.semigroup()));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  same_semigroup(a, b);
  std::vector<int> gens;
  for (int x : a.min_gens())
    for (int y : b.min_gens()) gens.push_back(x + y);
  return MonomialIdeal::from_degrees(a.semigroup(), gens);
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  same_semigroup(a, b);
  std::vector<int> gens = a.min_gens();
  gens.insert(gens.end(), b.min_gens().begin(), b.min_gens().end());
  return MonomialIdeal::from_degrees(a.semigroup(), gens);
}

MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  same_semigroup(a, b);
  const int lo = std::max(a.min_degree(), b.min_degree());
  const int hi = std::max(a.full_from(), b.full_from());
  return MonomialIdeal::from_predicate(a.semigroup(), lo, hi,
                                       [&](int z) { return a.contains(z) && b.contains(z); });
}

MonomialIdeal shift(const MonomialIdeal& a, int s) {
  return MonomialIdeal::from_predicate(a.semigroup(), a.min_degree() + s, a.full_from() + s,
                                       [&](int z) { return a.contains(z - s); });
}

CanonicalIdeal canonical_ideal(const NumericalSemigroup& s) {
  if (s.is_dvr()) {
    auto r = MonomialIdeal::unit(s);
    return {r, 0, r};
  }
  const int f = s.frobenius();
  auto k = MonomialIdeal::from_predicate(s, 0, f + 1, [&](int z) { return !s.contains(f - z); });
  int sh = 0;
  auto inside = [&](int t) {
    return std::all_of(k.min_gens().begin(), k.min_gens().end(),
                       [&](int g) { return s.contains(g + t); });
  };
  while (!inside(sh)) ++sh;
  return {k, sh, shift(k, sh)};
}

MonomialIdeal conductor_ideal(const NumericalSemigroup& s) {
  const int c = s.conductor();
  return MonomialIdeal::from_predicate(s, c, c, [](int) { return true; });
}

MonomialIdeal trace_ideal(const MonomialIdeal& i) {
  const auto& s = i.semigroup();
  std::vector<int> gens;
  for (int x : i.min_gens()) {
    auto c = colon(MonomialIdeal::principal(s, x), i);
    gens.insert(gens.end(), c.min_gens().begin(), c.min_gens().end());
  }
  return MonomialIdeal::from_degrees(s, gens);
}

MonomialIdeal trace_via_single_colon(const MonomialIdeal& i, int x_degree) {
  const auto& g = i.min_gens();
  if (std::find(g.begin(), g.end(), x_degree) == g.end())
    throw Error(ErrorKind::NotAGenerator,
                std::to_string(x_degree) + " is not a minimal generator of " + i.to_string());
  auto x = MonomialIdeal::principal(i.semigroup(), x_degree);
  return colon(product(i, colon(x, i)), x);
}

MonomialIdeal hom_ideal(const MonomialIdeal& i, const MonomialIdeal& j) { return colon(j, i); }

bool is_ulrich_ideal(const MonomialIdeal& i) {
  if (!i.inside_ring()) throw Error(ErrorKind::NotInsideRing, i.to_string() + " is not inside R");
  const auto& s = i.semigroup();
  return shift(i, s.multiplicity()) == product(MonomialIdeal::maximal(s), i);
}

SemigroupConditions theorem38_semigroup_report(const MonomialIdeal& i) {
  const auto& s = i.semigroup();
  if (!s.has_minimal_multiplicity())
    throw Error(ErrorKind::NotMinimalMultiplicity, "semigroup lacks minimal multiplicity");
  if (!i.inside_ring()) throw Error(ErrorKind::NotInsideRing, i.to_string() + " is not inside R");
  if (i.is_principal()) throw Error(ErrorKind::PrincipalIdeal, i.to_string() + " is principal");
  const int e = s.multiplicity();
  const auto m = MonomialIdeal::maximal(s);
  const auto col = colon(MonomialIdeal::principal(s, i.min_degree()), i);
  const auto tr = trace_ideal(i);
  SemigroupConditions out;
  out.c1_colon_is_m = col == m;
  out.c2_trace_is_m = tr == m;
  out.c8_y_in_colon = col.contains(e);
  out.c14_y_in_trace = tr.contains(e);
  // Isomorphic monomial ideals are shifts; shifts below -min(I) leave R.
  for (int sh = -i.min_degree(); sh <= 2 * s.conductor(); ++sh) {
    if (!i.contains(e - sh)) continue;
    bool inside = std::all_of(i.min_gens().begin(), i.min_gens().end(),
                              [&](int g) { return s.contains(g + sh); });
    if (inside) {
      out.c15_iso_ideal_containing_y = true;
      out.c15_shift = sh;
      break;
    }
  }
  return out;
}

std::string_view to_string(GorensteinCategory c) {
  switch (c) {
    case GorensteinCategory::Gorenstein: return "gorenstein";
    case GorensteinCategory::NearlyGorenstein: return "nearly_gorenstein";
    case GorensteinCategory::FarFlung: return "far_flung";
    case GorensteinCategory::Intermediate: return "intermediate";
  }
  return "unknown";
}

Classification classify(const NumericalSemigroup& s) {
  if (s.is_dvr()) throw Error(ErrorKind::DvrInput, "classification needs a non-DVR semigroup");
  auto can = canonical_ideal(s);
  const auto m = MonomialIdeal::maximal(s);
  if (s.type() == 1) {
    auto r = MonomialIdeal::unit(s);
    return {GorensteinCategory::Gorenstein, true, true, true, r == conductor_ideal(s), can, r};
  }
  auto tr = trace_ideal(can.ideal);
  const bool nearly = m.subset_of(tr);
  const bool almost =
      m.subset_of(colon(MonomialIdeal::principal(s, can.ideal.min_degree()), can.ideal));
  const bool far = tr == conductor_ideal(s);
  GorensteinCategory cat = nearly ? GorensteinCategory::NearlyGorenstein
                           : far  ? GorensteinCategory::FarFlung
                                  : GorensteinCategory::Intermediate;
  return {cat, false, nearly, almost, far, can, tr};
}

}  // namespace nsg
