#include "nsg/graded.hpp"

#include <algorithm>
#include <string>

#include "nsg/error.hpp"

namespace nsg {

TruncatedRing::TruncatedRing(NumericalSemigroup s, std::uint32_t p, std::optional<int> cap_hint)
    : s_(std::move(s)), f_(p), cap_(std::max(cap_hint.value_or(0), minimum_cap(s_))) {
  index_.assign(static_cast<std::size_t>(cap_), -1);
  for (int d = 0; d < cap_; ++d)
    if (s_.contains(d)) {
      index_[static_cast<std::size_t>(d)] = static_cast<int>(basis_.size());
      basis_.push_back(d);
    }
}

int TruncatedRing::minimum_cap(const NumericalSemigroup& s) {
  return 2 * s.conductor() + 2 * s.max_generator();
}

std::optional<std::size_t> TruncatedRing::index_of(int degree) const {
  if (degree < 0 || degree >= cap_ || index_[static_cast<std::size_t>(degree)] < 0) return std::nullopt;
  return static_cast<std::size_t>(index_[static_cast<std::size_t>(degree)]);
}

TruncatedRing TruncatedRing::ensure_reportable(int degree) const {
  if (degree <= reportable_limit()) return *this;
  TruncatedRing doubled = with_cap(2 * cap_);
  if (degree <= doubled.reportable_limit()) return doubled;
  throw Error(ErrorKind::CapExceeded, "degree " + std::to_string(degree) +
                                          " lies beyond the guard band of cap " +
                                          std::to_string(doubled.cap()));
}

RingElement RingElement::monomial(const TruncatedRing& r, int degree, Coeff c) {
  RingElement x;
  c = r.field().from_int(c);
  if (c && r.has_degree(degree)) x.terms_[degree] = c;
  return x;
}

RingElement add(const TruncatedRing& r, const RingElement& a, const RingElement& b) {
  RingElement out = a;
  for (auto [d, c] : b.terms_) {
    Coeff v = r.field().add(out.terms_[d], c);
    if (v) out.terms_[d] = v;
    else out.terms_.erase(d);
  }
  return out;
}

RingElement multiply(const TruncatedRing& r, const RingElement& a, const RingElement& b) {
  RingElement out;
  for (auto [da, ca] : a.terms_)
    for (auto [db, cb] : b.terms_) {
      if (da + db >= r.cap()) continue;
      Coeff v = r.field().add(out.terms_[da + db], r.field().mul(ca, cb));
      if (v) out.terms_[da + db] = v;
      else out.terms_.erase(da + db);
    }
  return out;
}

GradedMatrix::GradedMatrix(std::vector<int> row_shifts, std::vector<int> col_shifts, DenseMatrix coeffs)
    : rows_(std::move(row_shifts)), cols_(std::move(col_shifts)), c_(std::move(coeffs)) {
  if (c_.rows() != rows_.size() || c_.cols() != cols_.size())
    throw Error(ErrorKind::InvalidInput, "shift lists do not match the coefficient matrix");
}

GradedMatrix GradedMatrix::generator_row(const MonomialIdeal& i) {
  DenseMatrix c(1, i.min_gens().size());
  for (std::size_t j = 0; j < c.cols(); ++j) c(0, j) = 1;
  return GradedMatrix({0}, i.min_gens(), std::move(c));
}

std::optional<MatrixEntry> GradedMatrix::entry(std::size_t i, std::size_t j) const {
  if (!c_(i, j)) return std::nullopt;
  return MatrixEntry{entry_degree(i, j), c_(i, j)};
}

void GradedMatrix::validate(const NumericalSemigroup& s) const {
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (c_(i, j) && !s.contains(entry_degree(i, j)))
        throw Error(ErrorKind::InvalidInput, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                 ") has degree " + std::to_string(entry_degree(i, j)) +
                                                 " outside the semigroup");
}

GradedMatrix GradedMatrix::transpose() const {
  std::vector<int> r(cols_.size()), c(rows_.size());
  std::transform(cols_.begin(), cols_.end(), r.begin(), [](int x) { return -x; });
  std::transform(rows_.begin(), rows_.end(), c.begin(), [](int x) { return -x; });
  return GradedMatrix(std::move(r), std::move(c), c_.transpose());
}

bool GradedMatrix::has_unit_entry() const {
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (c_(i, j) && entry_degree(i, j) == 0) return true;
  return false;
}

std::size_t GradedMatrix::nonzeros_in_column(std::size_t j) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < rows(); ++i) n += c_(i, j) != 0;
  return n;
}

GradedMatrix multiply(const PrimeField& f, const GradedMatrix& a, const GradedMatrix& b) {
  if (a.col_shifts() != b.row_shifts())
    throw Error(ErrorKind::InvalidInput, "graded matrices are not composable");
  return GradedMatrix(a.row_shifts(), b.col_shifts(), multiply(f, a.coeffs(), b.coeffs()));
}

std::vector<std::size_t> active_columns(const NumericalSemigroup& s, const std::vector<int>& shifts,
                                        int n) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < shifts.size(); ++j)
    if (s.contains(n - shifts[j])) out.push_back(j);
  return out;
}

std::vector<DegreeKernel> kernel_degreewise(const TruncatedRing& r, const GradedMatrix& m, int up_to) {
  if (up_to > r.reportable_limit())
    throw Error(ErrorKind::CapExceeded, "degree " + std::to_string(up_to) + " is inside the guard band");
  std::vector<DegreeKernel> out;
  if (m.cols() == 0) return out;
  std::vector<std::size_t> all_rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) all_rows[i] = i;
  const int lo = *std::min_element(m.col_shifts().begin(), m.col_shifts().end());
  for (int n = lo; n <= up_to; ++n) {
    auto act = active_columns(r.semigroup(), m.col_shifts(), n);
    out.push_back({n, kernel(r.field(), m.coeffs(), all_rows, act)});
  }
  return out;
}

std::vector<std::size_t> minimal_generators(const NumericalSemigroup& s, const PrimeField& f,
                                            const std::vector<int>& shifts,
                                            const std::vector<HomogeneousVector>& vectors) {
  const std::size_t amb = shifts.size();
  std::vector<std::size_t> order(vectors.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return vectors[a].degree < vectors[b].degree; });
  // N_d: span of every input vector pushed into degree d.
  auto span_at = [&](int d) {
    Subspace sp(f, amb);
    for (const auto& hv : vectors)
      if (s.contains(d - hv.degree)) sp.insert(hv.v);
    return sp;
  };
  std::vector<std::size_t> kept;
  std::size_t k = 0;
  while (k < order.size()) {
    const int d = vectors[order[k]].degree;
    Subspace acc(f, amb);
    for (int a : s.generators()) acc.add(span_at(d - a));
    for (; k < order.size() && vectors[order[k]].degree == d; ++k)
      if (acc.insert(vectors[order[k]].v)) kept.push_back(order[k]);
  }
  return kept;
}

GradedMatrix syzygy(const TruncatedRing& r0, const GradedMatrix& m) {
  const auto& s = r0.semigroup();
  const auto& f = r0.field();
  const std::vector<int>& cs = m.col_shifts();
  if (m.cols() == 0) return GradedMatrix({}, {}, DenseMatrix(0, 0));
  const int e = s.multiplicity();
  const int lo = *std::min_element(cs.begin(), cs.end());
  const int hi = *std::max_element(cs.begin(), cs.end());
  // Every column is alive from hi + c on, so the full-kernel run starts by then.
  r0.ensure_reportable(hi + s.conductor() + e);
  const std::size_t kfull = m.cols() - rank(f, m.coeffs());

  bool one_row = m.rows() == 1;
  for (std::size_t j = 0; one_row && j < m.cols(); ++j) one_row = m.coeffs()(0, j) != 0;
  std::vector<std::size_t> all_rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) all_rows[i] = i;

  std::map<int, Subspace> k_at;
  std::vector<HomogeneousVector> gens;
  int run = 0;
  for (int n = lo;; ++n) {
    auto act = active_columns(s, cs, n);
    std::vector<Vec> cand;
    if (one_row) {
      // Pair relations C_j e_i - C_i e_j, in lexicographic order.
      for (std::size_t a = 0; a < act.size(); ++a)
        for (std::size_t b = a + 1; b < act.size(); ++b) {
          Vec v(m.cols(), 0);
          v[act[a]] = m.coeffs()(0, act[b]);
          v[act[b]] = f.neg(m.coeffs()(0, act[a]));
          cand.push_back(std::move(v));
        }
    } else {
      cand = kernel(f, m.coeffs(), all_rows, act);
    }
    Subspace kn(f, m.cols());
    Subspace acc(f, m.cols());
    for (int a : s.generators()) {
      auto it = k_at.find(n - a);
      if (it != k_at.end()) acc.add(it->second);
    }
    for (auto& v : cand) {
      kn.insert(v);
      if (acc.insert(v)) gens.push_back({n, std::move(v)});
    }
    run = kn.dim() == kfull ? run + 1 : 0;
    k_at.emplace(n, std::move(kn));
    k_at.erase(n - s.max_generator() - 1);
    if (run >= e) break;
  }
  DenseMatrix c(m.cols(), gens.size());
  std::vector<int> shifts;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (std::size_t i = 0; i < m.cols(); ++i) c(i, k) = gens[k].v[i];
    shifts.push_back(gens[k].degree);
  }
  return GradedMatrix(cs, std::move(shifts), std::move(c));
}

std::vector<GradedMatrix> free_resolution(const TruncatedRing& r, const GradedMatrix& gen_row,
                                          int steps) {
  if (steps < 1) throw Error(ErrorKind::InvalidInput, "resolution needs at least one step");
  std::vector<GradedMatrix> out;
  out.push_back(syzygy(r, gen_row));
  while (static_cast<int>(out.size()) < steps) out.push_back(syzygy(r, out.back()));
  return out;
}

GradedModule GradedModule::free(std::vector<int> degrees) {
  DenseMatrix none(degrees.size(), 0);
  GradedMatrix rel(degrees, {}, std::move(none));
  return {std::move(degrees), std::move(rel)};
}

GradedModule GradedModule::of_ideal(const TruncatedRing& r, const MonomialIdeal& i) {
  auto pres = syzygy(r, GradedMatrix::generator_row(i));
  return {i.min_gens(), std::move(pres)};
}

std::map<int, int> hilbert_function(const TruncatedRing& r, const GradedModule& m, int from, int up_to) {
  const auto& s = r.semigroup();
  const auto& rel = m.relations;
  std::map<int, int> out;
  for (int n = from; n <= up_to; ++n) {
    auto rows = active_columns(s, m.generator_degrees, n);
    auto cols = active_columns(s, rel.col_shifts(), n);
    DenseMatrix sub(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < cols.size(); ++b) sub(a, b) = rel.coeffs()(rows[a], cols[b]);
    out[n] = static_cast<int>(rows.size() - rank(r.field(), std::move(sub)));
  }
  return out;
}

int module_length(const TruncatedRing& r, const GradedModule& m) {
  if (m.generator_degrees.empty()) return 0;
  const auto& g = m.generator_degrees;
  const auto& cs = m.relations.col_shifts();
  int lo = *std::min_element(g.begin(), g.end());
  int hi = *std::max_element(g.begin(), g.end());
  if (!cs.empty()) hi = std::max(hi, *std::max_element(cs.begin(), cs.end()));
  hi += r.semigroup().conductor();
  // From hi on every generator and relation is alive, so the dimension is constant.
  auto hf = hilbert_function(r, m, lo, hi);
  if (hf[hi] != 0) throw Error(ErrorKind::InvalidInput, "module does not have finite length");
  int total = 0;
  for (auto [d, v] : hf) total += v;
  return total;
}

int module_multiplicity(const TruncatedRing& r, const GradedModule& m) {
  const int e = r.semigroup().multiplicity();
  const auto& rel = m.relations;
  const std::size_t extra = m.generator_degrees.size();
  DenseMatrix c(rel.rows(), rel.cols() + extra);
  for (std::size_t i = 0; i < rel.rows(); ++i) {
    for (std::size_t j = 0; j < rel.cols(); ++j) c(i, j) = rel.coeffs()(i, j);
    c(i, rel.cols() + i) = 1;
  }
  std::vector<int> cols = rel.col_shifts();
  for (int d : m.generator_degrees) cols.push_back(d + e);
  GradedModule q{m.generator_degrees, GradedMatrix(m.generator_degrees, std::move(cols), std::move(c))};
  return module_length(r, q);
}

bool stabilization_check(const std::function<DimsByDegree(const TruncatedRing&)>& computation,
                         const TruncatedRing& base, int d1, int d2) {
  if (d2 <= d1 || d1 < TruncatedRing::minimum_cap(base.semigroup()))
    throw Error(ErrorKind::InvalidInput, "stabilization needs minimum cap <= D1 < D2");
  return computation(base.with_cap(d1)) == computation(base.with_cap(d2));
}

}  // namespace nsg
