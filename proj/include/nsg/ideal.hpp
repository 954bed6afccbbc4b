#pragma once

#include <algorithm>
#include <span>
#include <string_view>
#include <string>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

// A nonzero fractional monomial ideal: a bounded-below set of integers E with E + S in E.
// Membership is stored on [min_degree, full_from); everything from full_from on is a member.
class MonomialIdeal {
 public:
  static MonomialIdeal from_degrees(const NumericalSemigroup& s, std::span<const int> gens);
  static MonomialIdeal from_degrees(const NumericalSemigroup& s, std::initializer_list<int> gens);
  static MonomialIdeal principal(const NumericalSemigroup& s, int degree);
  static MonomialIdeal unit(const NumericalSemigroup& s) { return principal(s, 0); }
  static MonomialIdeal maximal(const NumericalSemigroup& s);
  // Members are exactly the z in [lo, hi) with pred(z), plus every z >= hi.
  template <class Pred>
  static MonomialIdeal from_predicate(const NumericalSemigroup& s, int lo, int hi, Pred pred);

  const NumericalSemigroup& semigroup() const noexcept { return s_; }
  int min_degree() const noexcept { return lo_; }
  int full_from() const noexcept { return full_; }
  bool contains(int z) const noexcept {
    if (z >= full_) return true;
    if (z < lo_) return false;
    return bits_[static_cast<std::size_t>(z - lo_)] != 0;
  }
  const std::vector<int>& min_gens() const noexcept { return gens_; }
  int mu() const noexcept { return static_cast<int>(gens_.size()); }
  bool is_principal() const noexcept { return gens_.size() == 1; }
  bool inside_ring() const noexcept;
  bool subset_of(const MonomialIdeal& o) const;

  bool operator==(const MonomialIdeal& o) const noexcept;
  bool operator!=(const MonomialIdeal& o) const noexcept { return !(*this == o); }

  std::string to_string() const;

 private:
  MonomialIdeal(NumericalSemigroup s, int lo, int full, std::vector<char> bits);
  NumericalSemigroup s_;
  int lo_;
  int full_;
  std::vector<char> bits_;
  std::vector<int> gens_;
};

// (J : I) = {z : z + I in J}. Represents Hom(I, J).
MonomialIdeal colon(const MonomialIdeal& j, const MonomialIdeal& i);
// (J : I) intersected with R.
MonomialIdeal ring_colon(const MonomialIdeal& j, const MonomialIdeal& i);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal shift(const MonomialIdeal& a, int s);

struct CanonicalIdeal {
  MonomialIdeal fractional;  // {z : F - z not in S}
  int shift;                 // least s >= 0 moving it inside R
  MonomialIdeal ideal;       // fractional shifted by `shift`
};

CanonicalIdeal canonical_ideal(const NumericalSemigroup& s);
MonomialIdeal conductor_ideal(const NumericalSemigroup& s);
MonomialIdeal trace_ideal(const MonomialIdeal& i);
MonomialIdeal trace_via_single_colon(const MonomialIdeal& i, int x_degree);
MonomialIdeal hom_ideal(const MonomialIdeal& i, const MonomialIdeal& j);
bool is_ulrich_ideal(const MonomialIdeal& i);

struct SemigroupConditions {
  bool c1_colon_is_m = false;
  bool c2_trace_is_m = false;
  bool c8_y_in_colon = false;
  bool c14_y_in_trace = false;
  bool c15_iso_ideal_containing_y = false;
  int c15_shift = 0;  // witness shift when c15 holds
  bool all_agree() const {
    return c1_colon_is_m == c2_trace_is_m && c2_trace_is_m == c8_y_in_colon &&
           c8_y_in_colon == c14_y_in_trace && c14_y_in_trace == c15_iso_ideal_containing_y;
  }
};

SemigroupConditions theorem38_semigroup_report(const MonomialIdeal& i);

enum class GorensteinCategory { Gorenstein, NearlyGorenstein, FarFlung, Intermediate };
std::string_view to_string(GorensteinCategory c);

struct Classification {
  GorensteinCategory category;
  bool gorenstein;
  bool nearly;     // m in tr(omega)
  bool almost;     // m in (x_1 : omega), x_1 the lowest canonical generator
  bool far_flung;  // tr(omega) = conductor
  CanonicalIdeal canonical;
  MonomialIdeal trace;
};

Classification classify(const NumericalSemigroup& s);

template <class Pred>
MonomialIdeal MonomialIdeal::from_predicate(const NumericalSemigroup& s, int lo, int hi, Pred pred) {
  std::vector<char> bits;
  if (hi > lo) bits.reserve(static_cast<std::size_t>(hi - lo));
  for (int z = lo; z < hi; ++z) bits.push_back(pred(z) ? 1 : 0);
  return MonomialIdeal(s, lo, std::max(lo, hi), std::move(bits));
}

}  // namespace nsg
