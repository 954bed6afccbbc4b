#pragma once

#include <array>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "nsg/graded.hpp"
#include "nsg/ideal.hpp"

namespace nsg {

enum class HomologyTarget { Tor1Self, Ext1R, ExtIR, Ext1Dual, ExtIDual, Wedge2, Sym2, Delta1, H1, B1modIZ1 };
std::string_view to_string(HomologyTarget t);

struct HomologyReport {
  HomologyTarget target = HomologyTarget::Tor1Self;
  int index = 1;  // Ext index
  DimsByDegree dims;
  int total_dim = 0;
  bool killed_by_y = false;
  bool killed_by_m = false;
  bool stabilized = false;
  bool finite = true;
};

// A degreewise subquotient num(n) / den(n) of a fixed coordinate space, on which
// multiplication by t^a is the identity on coordinates. Zero outside [lo, hi).
struct Subquotient {
  std::function<Subspace(int)> num;
  std::function<Subspace(int)> den;
  int lo = 0;
  int hi = 0;
};

// Dimensions plus annihilation by y = t^e and by every generator of S.
HomologyReport evaluate(const NumericalSemigroup& s, HomologyTarget target, const Subquotient& q);

// Per-ideal cache of the resolution and related ideals. Not thread-safe; one per task.
class IdealContext {
 public:
  IdealContext(TruncatedRing ring, MonomialIdeal ideal, bool check_stability = true);

  const TruncatedRing& ring() const noexcept { return ring_; }
  const NumericalSemigroup& semigroup() const noexcept { return ring_.semigroup(); }
  const PrimeField& field() const noexcept { return ring_.field(); }
  const MonomialIdeal& ideal() const noexcept { return ideal_; }
  const std::vector<int>& gens() const noexcept { return ideal_.min_gens(); }
  bool check_stability() const noexcept { return check_stability_; }

  // d_k of the minimal resolution; d_0 is the syzygy matrix of the generator row.
  const GradedMatrix& differential(int k);
  // Hom(I, omega) as the fractional ideal (omega : I).
  const MonomialIdeal& canonical_dual();
  // Same ideal over the ring with the given cap, fresh caches.
  IdealContext at_cap(int cap) const;
  int stability_cap() const { return ring_.cap() + semigroup().multiplicity(); }

 private:
  TruncatedRing ring_;
  MonomialIdeal ideal_;
  bool check_stability_;
  std::deque<GradedMatrix> res_;  // deque keeps references stable
  std::optional<MonomialIdeal> dual_;
};

enum class ExtTarget { R, CanonicalDual };
enum class Multiplier { Y, AllOfM };

struct KoszulData {
  GradedMatrix z1;  // minimal generators of the Koszul cycles (= d_0)
  GradedMatrix b1;  // boundaries x_i e_j - x_j e_i, i < j
  HomologyReport h1;
};

KoszulData koszul_ZB(IdealContext& ctx);
bool check_yB1_in_IZ1(IdealContext& ctx, Multiplier mult);
HomologyReport h1(IdealContext& ctx);
HomologyReport delta1(IdealContext& ctx);
HomologyReport b1_mod_iz1(IdealContext& ctx);
// Tor_1(I, R/I) as (Z_1 meet IF) / IZ_1.
HomologyReport tor1_self(IdealContext& ctx);
// Tor_1(I, R/I) as homology of the resolution tensored with R/I.
HomologyReport tor1_self_resolution(IdealContext& ctx);
// Ext^i(I, E) from d_{i-1} alone, working modulo the left kernel.
HomologyReport ext_i(IdealContext& ctx, ExtTarget target, int i);
// Ext^i(I, E) as ker(d_i^T) / im(d_{i-1}^T).
HomologyReport ext_i_resolution(IdealContext& ctx, ExtTarget target, int i);
bool matlis_consistency(IdealContext& ctx);
// Exterior square by a signed union-find on the pair generators.
HomologyReport wedge2(IdealContext& ctx);
// Exterior square by elimination against the relations z ^ e_j.
HomologyReport wedge2_generic(IdealContext& ctx);
HomologyReport sym2(IdealContext& ctx);

// Ideal generated by the entries of a minimal presentation of M^*. Throws NotMinimal.
MonomialIdeal trace_of_module(const TruncatedRing& r, const GradedMatrix& presentation);

struct Z1IsoCertificate {
  bool colons_are_m = false;           // (x_1 : x_j) = m for j >= 2
  bool images_independent = false;     // images of m-generators independent modulo m Z_1
  bool hilbert_equal = false;          // Z_1 and sum m(-|x_j|) agree degreewise
  bool generator_degrees_equal = false;
  bool iso = false;                    // certified graded isomorphism
  bool refuted = false;                // a graded invariant differs, so no graded iso exists
};

Z1IsoCertificate check_Z1_iso_shifted_m(IdealContext& ctx);

// Ext tail loop: j-th step tests tr(Omega^j) against the killer, then Ext^{j+1}.
struct ExtTailResult {
  std::optional<bool> killed;  // nullopt when no certificate was found within the depth
  int certificate_index = -1;  // j with tr(Omega^j) doing the job
  int refuting_index = -1;     // i with Ext^i not killed
  std::vector<HomologyReport> reports;
  std::vector<MonomialIdeal> syzygy_traces;
};

ExtTailResult ext_tail(IdealContext& ctx, ExtTarget target, Multiplier mult, int depth);

struct Theorem38Battery {
  std::array<std::optional<bool>, 16> conditions{};  // index k holds condition (k+1)
  bool conclusive = false;
  bool agreement = false;
  bool trace_routes_agree = false;
  SemigroupConditions semigroup;
  std::optional<MonomialIdeal> colon_trace;
  std::optional<MonomialIdeal> presentation_trace;
  HomologyReport ext1_dual;
  HomologyReport tor1;
  HomologyReport wedge;
  Z1IsoCertificate z1;
  ExtTailResult tail_m;
  ExtTailResult tail_y;
};

Theorem38Battery theorem38_battery(IdealContext& ctx, int ext_depth = 3);

enum class Q12Status { Vacuous, Certified, Refuted, Inconclusive };
std::string_view to_string(Q12Status s);

struct Question12Result {
  Q12Status status = Q12Status::Vacuous;
  std::optional<bool> m_kills_ext;
  bool nearly_gorenstein = false;
  bool is_counterexample = false;
  ExtTailResult tail;
  std::optional<Classification> classification;
};

Question12Result question12_check(const NumericalSemigroup& s, std::uint32_t p, int depth = 3,
                                  std::optional<int> cap = std::nullopt);

}  // namespace nsg
