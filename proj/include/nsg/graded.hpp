#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "nsg/field.hpp"
#include "nsg/ideal.hpp"
#include "nsg/linalg.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

// k[S] / (degrees >= cap) over F_p. Degrees below cap - guard are reported exactly.
class TruncatedRing {
 public:
  TruncatedRing(NumericalSemigroup s, std::uint32_t p, std::optional<int> cap_hint = std::nullopt);

  static int minimum_cap(const NumericalSemigroup& s);

  const NumericalSemigroup& semigroup() const noexcept { return s_; }
  const PrimeField& field() const noexcept { return f_; }
  int cap() const noexcept { return cap_; }
  int guard() const noexcept { return s_.max_generator(); }
  int reportable_limit() const noexcept { return cap_ - guard(); }
  const std::vector<int>& basis() const noexcept { return basis_; }
  std::optional<std::size_t> index_of(int degree) const;
  bool has_degree(int d) const noexcept { return d >= 0 && d < cap_ && s_.contains(d); }
  TruncatedRing with_cap(int cap) const { return TruncatedRing(s_, f_.prime(), cap); }

  // Throws CapExceeded unless `degree` is reportable at this cap or after one doubling.
  // Returns the ring to use.
  TruncatedRing ensure_reportable(int degree) const;

 private:
  NumericalSemigroup s_;
  PrimeField f_;
  int cap_;
  std::vector<int> basis_;
  std::vector<int> index_;  // degree -> basis index or -1
};

// Sparse element sum c_d t^d of the truncated ring.
class RingElement {
 public:
  RingElement() = default;
  static RingElement monomial(const TruncatedRing& r, int degree, Coeff c);

  const std::map<int, Coeff>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_homogeneous() const noexcept { return terms_.size() <= 1; }

  friend RingElement add(const TruncatedRing& r, const RingElement& a, const RingElement& b);
  friend RingElement multiply(const TruncatedRing& r, const RingElement& a, const RingElement& b);
  bool operator==(const RingElement&) const = default;

 private:
  std::map<int, Coeff> terms_;
};

struct MatrixEntry {
  int degree;
  Coeff coeff;
};

// Homogeneous map of graded free modules: the entry at (i, j) is coeff * t^(col_j - row_i).
// Monomials never multiply to zero in k[S], so products only touch coefficients.
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(std::vector<int> row_shifts, std::vector<int> col_shifts, DenseMatrix coeffs);

  // The 1 x mu row of minimal generators of a monomial ideal.
  static GradedMatrix generator_row(const MonomialIdeal& i);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_.size(); }
  const std::vector<int>& row_shifts() const noexcept { return rows_; }
  const std::vector<int>& col_shifts() const noexcept { return cols_; }
  const DenseMatrix& coeffs() const noexcept { return c_; }
  int entry_degree(std::size_t i, std::size_t j) const { return cols_[j] - rows_[i]; }
  std::optional<MatrixEntry> entry(std::size_t i, std::size_t j) const;

  // Throws InvalidInput when a nonzero entry has a degree outside S.
  void validate(const NumericalSemigroup& s) const;
  GradedMatrix transpose() const;
  bool has_unit_entry() const;
  std::size_t nonzeros_in_column(std::size_t j) const;

  bool operator==(const GradedMatrix&) const = default;

 private:
  std::vector<int> rows_;
  std::vector<int> cols_;
  DenseMatrix c_;
};

GradedMatrix multiply(const PrimeField& f, const GradedMatrix& a, const GradedMatrix& b);

// Columns of a free module F = sum R(-shift_j) alive in degree n.
std::vector<std::size_t> active_columns(const NumericalSemigroup& s, const std::vector<int>& shifts,
                                        int n);

struct DegreeKernel {
  int degree;
  std::vector<Vec> basis;  // vectors in source coordinates
};

// Kernel of each degree component, for degrees from the lowest live one up to `up_to`.
std::vector<DegreeKernel> kernel_degreewise(const TruncatedRing& r, const GradedMatrix& m, int up_to);

struct HomogeneousVector {
  int degree;
  Vec v;
};

// Greedy by (degree, input order): keep a vector unless it lies in the span of the kept
// vectors of its degree plus m times the submodule generated by all inputs.
std::vector<std::size_t> minimal_generators(const NumericalSemigroup& s, const PrimeField& f,
                                            const std::vector<int>& shifts,
                                            const std::vector<HomogeneousVector>& vectors);

// Minimal generating matrix of ker(m). The degree loop stops on the certificate that the
// kernel has been full for e consecutive degrees; the stop degree must be reportable.
GradedMatrix syzygy(const TruncatedRing& r, const GradedMatrix& m);

// [d_0, ..., d_{steps-1}] with d_0 = syzygy(gen_row) and d_{k+1} = syzygy(d_k).
std::vector<GradedMatrix> free_resolution(const TruncatedRing& r, const GradedMatrix& gen_row,
                                          int steps);

// Cokernel of a presentation matrix: generators in the row shifts, relations in the columns.
struct GradedModule {
  std::vector<int> generator_degrees;
  GradedMatrix relations;

  static GradedModule free(std::vector<int> degrees);
  static GradedModule of_ideal(const TruncatedRing& r, const MonomialIdeal& i);
};

std::map<int, int> hilbert_function(const TruncatedRing& r, const GradedModule& m, int from, int up_to);
int module_length(const TruncatedRing& r, const GradedModule& m);
// dim M / t^e M, the multiplicity of a maximal Cohen-Macaulay module.
int module_multiplicity(const TruncatedRing& r, const GradedModule& m);

using DimsByDegree = std::map<int, int>;
// Runs the computation at caps d1 and d2 and compares the reported dimensions.
bool stabilization_check(const std::function<DimsByDegree(const TruncatedRing&)>& computation,
                         const TruncatedRing& base, int d1, int d2);

}  // namespace nsg
