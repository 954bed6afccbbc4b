#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace nsg {

// Immutable numerical semigroup with cached invariants. Copies share state.
class NumericalSemigroup {
 public:
  // Reduces raw generators to the minimal system. Throws EmptyInput or GcdNotOne.
  static NumericalSemigroup from_generators(std::span<const int> raw);
  static NumericalSemigroup from_generators(std::initializer_list<int> raw);

  const std::vector<int>& generators() const noexcept;
  int multiplicity() const noexcept;
  int embedding_dimension() const noexcept;
  int max_generator() const noexcept;
  int frobenius() const noexcept;
  int conductor() const noexcept;
  int genus() const noexcept;
  const std::vector<int>& gaps() const noexcept;
  const std::vector<int>& pseudo_frobenius() const noexcept;
  // 0 for the DVR (all nonnegative integers), |PF| otherwise.
  int type() const noexcept;
  bool is_dvr() const noexcept;
  bool has_minimal_multiplicity() const noexcept;
  // Checked directly from the definition, independent of the type.
  bool is_symmetric() const;

  bool contains(int z) const noexcept;
  // Apery set with respect to a minimal generator m, indexed by residue mod m.
  const std::vector<int>& apery(int m) const;

  bool operator==(const NumericalSemigroup& o) const noexcept;
  bool operator!=(const NumericalSemigroup& o) const noexcept { return !(*this == o); }
  // Lexicographic on generator lists.
  bool operator<(const NumericalSemigroup& o) const noexcept;

 private:
  struct Data;
  explicit NumericalSemigroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

struct EnumerationBound {
  enum class Kind { MaxGenus, MaxFrobenius };
  Kind kind;
  int value;

  static EnumerationBound genus(int g) { return {Kind::MaxGenus, g}; }
  static EnumerationBound frobenius(int f) { return {Kind::MaxFrobenius, f}; }
};

inline constexpr int kMaxGenusCap = 20;
inline constexpr int kMaxFrobeniusCap = 28;

using SemigroupPredicate = std::function<bool(const NumericalSemigroup&)>;

// Every semigroup within the bound exactly once, by descent in the genus tree.
// Sorted by (genus, generators). Throws BoundTooLarge beyond the safety caps.
std::vector<NumericalSemigroup> enumerate_semigroups(EnumerationBound bound,
                                                     const SemigroupPredicate& keep = {},
                                                     int workers = 1);

// Number of genus-tree nodes within the bound, counted without building semigroups.
long long count_semigroups(EnumerationBound bound);

}  // namespace nsg
