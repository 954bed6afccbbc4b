#include "nsg/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace nsg {

Vec DenseMatrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec DenseMatrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Coeff c) { return c == 0; });
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Coeff c) { return c == 0; });
}

DenseMatrix multiply(const PrimeField& f, const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Coeff x = a(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j)) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
    }
  return c;
}

Vec apply(const PrimeField& f, const DenseMatrix& m, const Vec& v) {
  Vec out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) && v[j]) out[i] = f.add(out[i], f.mul(m(i, j), v[j]));
  return out;
}

std::vector<std::size_t> rref(const PrimeField& f, DenseMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Coeff inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Coeff factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j)) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const PrimeField& f, DenseMatrix m) { return rref(f, m).size(); }

std::vector<Vec> kernel(const PrimeField& f, const DenseMatrix& m,
                        std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  DenseMatrix sub(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(rows[i], cols[j]);
  auto pivots = rref(f, sub);
  std::vector<char> is_pivot(cols.size(), 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < cols.size(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[cols[free]] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[cols[pivots[k]]] = f.neg(sub(k, free));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> kernel(const PrimeField& f, const DenseMatrix& m) {
  std::vector<std::size_t> rows(m.rows()), cols(m.cols());
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  return kernel(f, m, rows, cols);
}

Subspace Subspace::span(const PrimeField& f, std::size_t ambient, std::span<const Vec> vectors) {
  Subspace s(f, ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::coordinate(const PrimeField& f, std::size_t ambient,
                              std::span<const std::size_t> idx) {
  Subspace s(f, ambient);
  for (auto i : idx) {
    Vec v(ambient, 0);
    v[i] = 1;
    s.insert(std::move(v));
  }
  return s;
}

Subspace Subspace::whole(const PrimeField& f, std::size_t ambient) {
  std::vector<std::size_t> idx(ambient);
  std::iota(idx.begin(), idx.end(), 0);
  return coordinate(f, ambient, idx);
}

Vec Subspace::reduce(Vec v) const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    Coeff c = v[pivots_[k]];
    if (!c) continue;
    const Vec& b = basis_[k];
    for (std::size_t j = 0; j < n_; ++j)
      if (b[j]) v[j] = f_.sub(v[j], f_.mul(c, b[j]));
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::insert(Vec v) {
  if (basis_.size() == n_) return false;
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < n_ && v[p] == 0) ++p;
  if (p == n_) return false;
  Coeff inv = f_.inv(v[p]);
  for (auto& x : v) x = f_.mul(x, inv);
  for (auto& b : basis_) {
    Coeff c = b[p];
    if (!c) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (v[j]) b[j] = f_.sub(b[j], f_.mul(c, v[j]));
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

void Subspace::add(const Subspace& other) {
  for (const auto& v : other.basis_) insert(v);
}

bool Subspace::contained_in(const Subspace& other) const {
  if (dim() > other.dim()) return false;
  return std::all_of(basis_.begin(), basis_.end(), [&](const Vec& v) { return other.contains(v); });
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
  Subspace s = a.dim() >= b.dim() ? a : b;
  s.add(a.dim() >= b.dim() ? b : a);
  return s;
}

Subspace Subspace::intersection(const Subspace& a, const Subspace& b) {
  // Zassenhaus: rows (u|u) and (w|0); rows of the echelon form with zero left half
  // span the intersection in the right half.
  const std::size_t n = a.n_;
  Subspace out(a.f_, n);
  if (a.dim() == 0 || b.dim() == 0) return out;
  if (a.dim() == n) return b;
  if (b.dim() == n) return a;
  DenseMatrix m(a.dim() + b.dim(), 2 * n);
  for (std::size_t k = 0; k < a.dim(); ++k)
    for (std::size_t j = 0; j < n; ++j) m(k, j) = m(k, n + j) = a.basis_[k][j];
  for (std::size_t k = 0; k < b.dim(); ++k)
    for (std::size_t j = 0; j < n; ++j) m(a.dim() + k, j) = b.basis_[k][j];
  auto pivots = rref(a.f_, m);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] < n) continue;
    Vec v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = m(k, n + j);
    out.insert(std::move(v));
  }
  return out;
}

bool Subspace::operator==(const Subspace& o) const {
  return n_ == o.n_ && dim() == o.dim() && contained_in(o);
}

}  // namespace nsg
