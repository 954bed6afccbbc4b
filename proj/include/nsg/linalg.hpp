#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nsg/field.hpp"

namespace nsg {

using Vec = std::vector<Coeff>;

// Row-major dense matrix over a prime field. Entries are stored reduced.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Coeff& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Coeff operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  DenseMatrix transpose() const;
  bool is_zero() const;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coeff> data_;
};

DenseMatrix multiply(const PrimeField& f, const DenseMatrix& a, const DenseMatrix& b);
Vec apply(const PrimeField& f, const DenseMatrix& m, const Vec& v);

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(const PrimeField& f, DenseMatrix& m);
std::size_t rank(const PrimeField& f, DenseMatrix m);

// Basis of {v : M v = 0} for the submatrix on the given rows and columns.
// Returned vectors live in full column coordinates (zero off `cols`).
std::vector<Vec> kernel(const PrimeField& f, const DenseMatrix& m,
                        std::span<const std::size_t> rows, std::span<const std::size_t> cols);
std::vector<Vec> kernel(const PrimeField& f, const DenseMatrix& m);

// A subspace of F^n kept as a fully reduced echelon basis.
class Subspace {
 public:
  Subspace(const PrimeField& f, std::size_t ambient) : f_(f), n_(ambient) {}

  static Subspace span(const PrimeField& f, std::size_t ambient, std::span<const Vec> vectors);
  static Subspace coordinate(const PrimeField& f, std::size_t ambient, std::span<const std::size_t> idx);
  static Subspace whole(const PrimeField& f, std::size_t ambient);

  std::size_t ambient() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  const PrimeField& field() const noexcept { return f_; }

  // Reduces v against the basis; the result is zero iff v is in the span.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool insert(Vec v);  // true if the dimension grew
  void add(const Subspace& other);
  bool contained_in(const Subspace& other) const;

  static Subspace sum(const Subspace& a, const Subspace& b);
  static Subspace intersection(const Subspace& a, const Subspace& b);

  bool operator==(const Subspace& o) const;

 private:
  PrimeField f_;
  std::size_t n_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

bool is_zero(const Vec& v);

}  // namespace nsg
