#include "nsg/homology.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nsg/error.hpp"

namespace nsg {

std::string_view to_string(HomologyTarget t) {
  switch (t) {
    case HomologyTarget::Tor1Self: return "Tor1Self";
    case HomologyTarget::Ext1R: return "Ext1_R";
    case HomologyTarget::ExtIR: return "ExtI_R";
    case HomologyTarget::Ext1Dual: return "Ext1_Dual";
    case HomologyTarget::ExtIDual: return "ExtI_Dual";
    case HomologyTarget::Wedge2: return "Wedge2";
    case HomologyTarget::Sym2: return "Sym2";
    case HomologyTarget::Delta1: return "Delta1";
    case HomologyTarget::H1: return "H1";
    case HomologyTarget::B1modIZ1: return "B1modIZ1";
  }
  return "unknown";
}

HomologyReport evaluate(const NumericalSemigroup& s, HomologyTarget target, const Subquotient& q) {
  HomologyReport rep;
  rep.target = target;
  std::map<int, Subspace> den_cache;
  auto den = [&](int n) -> const Subspace& {
    auto it = den_cache.find(n);
    if (it == den_cache.end()) it = den_cache.emplace(n, q.den(n)).first;
    return it->second;
  };
  std::map<int, Subspace> live;
  for (int n = q.lo; n < q.hi; ++n) {
    Subspace num = q.num(n);
    const int d = static_cast<int>(num.dim()) - static_cast<int>(den(n).dim());
    if (d < 0) throw Error(ErrorKind::InvalidInput, "subquotient denominator exceeds numerator");
    if (d > 0) {
      rep.dims[n] = d;
      rep.total_dim += d;
      live.emplace(n, std::move(num));
    }
  }
  auto killed_by = [&](int a) {
    return std::all_of(live.begin(), live.end(),
                       [&](const auto& kv) { return kv.second.contained_in(den(kv.first + a)); });
  };
  rep.killed_by_y = killed_by(s.multiplicity());
  rep.killed_by_m = rep.killed_by_y;
  for (int a : s.generators())
    if (rep.killed_by_m && a != s.multiplicity()) rep.killed_by_m = killed_by(a);
  return rep;
}

IdealContext::IdealContext(TruncatedRing ring, MonomialIdeal ideal, bool check_stability)
    : ring_(std::move(ring)), ideal_(std::move(ideal)), check_stability_(check_stability) {
  if (ideal_.semigroup() != ring_.semigroup())
    throw Error(ErrorKind::MixedSemigroups, "ideal and ring use different semigroups");
}

const GradedMatrix& IdealContext::differential(int k) {
  if (k < 0) throw Error(ErrorKind::InvalidInput, "negative differential index");
  if (res_.empty()) res_.push_back(syzygy(ring_, GradedMatrix::generator_row(ideal_)));
  while (static_cast<int>(res_.size()) <= k) res_.push_back(syzygy(ring_, res_.back()));
  return res_[static_cast<std::size_t>(k)];
}

const MonomialIdeal& IdealContext::canonical_dual() {
  if (!dual_) dual_ = hom_ideal(ideal_, canonical_ideal(semigroup()).ideal);
  return *dual_;
}

IdealContext IdealContext::at_cap(int cap) const {
  return IdealContext(ring_.with_cap(cap), ideal_, false);
}

namespace {

// Reruns a report one multiplicity above the cap and records whether it moved.
HomologyReport stable(IdealContext& ctx, const std::function<HomologyReport(IdealContext&)>& compute) {
  HomologyReport rep = compute(ctx);
  if (ctx.check_stability()) {
    IdealContext again = ctx.at_cap(ctx.stability_cap());
    rep.stabilized = compute(again).dims == rep.dims;
  }
  return rep;
}

void require_nonprincipal(const MonomialIdeal& i) {
  if (i.is_principal()) throw Error(ErrorKind::PrincipalIdeal, i.to_string() + " is principal");
}

// R/I only makes sense for I inside R.
void require_inside_ring(const MonomialIdeal& i) {
  if (!i.inside_ring()) throw Error(ErrorKind::NotInsideRing, i.to_string() + " is not inside R");
}

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

// Vectors with coordinate sum zero supported on idx.
Subspace sum_zero(const PrimeField& f, std::size_t n, const std::vector<std::size_t>& idx) {
  Subspace sp(f, n);
  for (std::size_t k = 1; k < idx.size(); ++k) {
    Vec v(n, 0);
    v[idx[k]] = 1;
    v[idx[0]] = f.neg(1);
    sp.insert(std::move(v));
  }
  return sp;
}

// Koszul data in the coordinates of F_0 = sum R(-g_i), generator row all ones.
class Koszul {
 public:
  explicit Koszul(IdealContext& ctx) : ctx_(ctx), s_(ctx.semigroup()), f_(ctx.field()), g_(ctx.gens()) {}

  std::size_t mu() const { return g_.size(); }
  int lo() const { return g_.front(); }
  int hi() const { return 2 * g_.back() + s_.conductor(); }

  std::vector<std::size_t> active(int n) const { return active_columns(s_, g_, n); }
  std::vector<std::size_t> in_ideal(int n) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < mu(); ++i)
      if (ctx_.ideal().contains(n - g_[i])) out.push_back(i);
    return out;
  }
  Subspace z1(int n) const { return sum_zero(f_, mu(), active(n)); }
  Subspace z1_meet_if(int n) const { return sum_zero(f_, mu(), in_ideal(n)); }
  Subspace iff(int n) const {
    auto idx = in_ideal(n);
    return Subspace::coordinate(f_, mu(), idx);
  }
  Subspace b1(int n) const {
    Subspace sp(f_, mu());
    for (std::size_t i = 0; i < mu(); ++i)
      for (std::size_t j = i + 1; j < mu(); ++j)
        if (s_.contains(n - g_[i] - g_[j])) {
          Vec v(mu(), 0);
          v[j] = 1;
          v[i] = f_.neg(1);
          sp.insert(std::move(v));
        }
    return sp;
  }
  Subspace iz1(int n) const {
    Subspace sp(f_, mu());
    for (int x : ctx_.gens()) sp.add(z1(n - x));
    return sp;
  }
  Subspace m_z1(int n) const {
    Subspace sp(f_, mu());
    for (int a : s_.generators()) sp.add(z1(n - a));
    return sp;
  }

 private:
  IdealContext& ctx_;
  const NumericalSemigroup& s_;
  const PrimeField& f_;
  const std::vector<int>& g_;
};

HomologyReport koszul_report(IdealContext& ctx, HomologyTarget t) {
  require_nonprincipal(ctx.ideal());
  return stable(ctx, [t](IdealContext& c) {
    Koszul k(c);
    c.ring().ensure_reportable(k.hi());
    Subquotient q;
    q.lo = k.lo();
    q.hi = k.hi();
    switch (t) {
      case HomologyTarget::H1:
        q.num = [k](int n) { return k.z1(n); };
        q.den = [k](int n) { return k.b1(n); };
        break;
      case HomologyTarget::Delta1:
        q.num = [k](int n) { return k.z1_meet_if(n); };
        q.den = [k](int n) { return k.b1(n); };
        break;
      case HomologyTarget::B1modIZ1:
        q.num = [k](int n) { return k.b1(n); };
        q.den = [k](int n) { return k.iz1(n); };
        break;
      default:
        q.num = [k](int n) { return k.z1_meet_if(n); };
        q.den = [k](int n) { return k.iz1(n); };
        break;
    }
    return evaluate(c.semigroup(), t, q);
  });
}

const MonomialIdeal& ext_target_ideal(IdealContext& ctx, ExtTarget t, std::optional<MonomialIdeal>& hold) {
  if (t == ExtTarget::CanonicalDual) return ctx.canonical_dual();
  hold = MonomialIdeal::unit(ctx.semigroup());
  return *hold;
}

HomologyTarget ext_tag(ExtTarget t, int i) {
  if (t == ExtTarget::R) return i == 1 ? HomologyTarget::Ext1R : HomologyTarget::ExtIR;
  return i == 1 ? HomologyTarget::Ext1Dual : HomologyTarget::ExtIDual;
}

std::vector<std::size_t> iota_n(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

KoszulData koszul_ZB(IdealContext& ctx) {
  require_nonprincipal(ctx.ideal());
  const auto& g = ctx.gens();
  const std::size_t mu = g.size();
  std::vector<int> shifts;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = i + 1; j < mu; ++j) {
      pairs.emplace_back(i, j);
      shifts.push_back(g[i] + g[j]);
    }
  DenseMatrix b(mu, pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    b(pairs[k].second, k) = 1;
    b(pairs[k].first, k) = ctx.field().neg(1);
  }
  KoszulData out{ctx.differential(0), GradedMatrix(g, shifts, std::move(b)), h1(ctx)};
  // I kills H_1: every t^x z with x in I lands in B_1.
  Koszul k(ctx);
  for (int n = k.lo(); n < k.hi(); ++n)
    if (!k.iz1(n).contained_in(k.b1(n)))
      throw Error(ErrorKind::HypothesisViolation, "I H_1 is nonzero in degree " + std::to_string(n));
  return out;
}

bool check_yB1_in_IZ1(IdealContext& ctx, Multiplier mult) {
  require_nonprincipal(ctx.ideal());
  Koszul k(ctx);
  const auto& g = ctx.gens();
  const auto& s = ctx.semigroup();
  std::vector<int> mults = mult == Multiplier::Y ? std::vector<int>{s.multiplicity()} : s.generators();
  std::map<int, Subspace> iz1;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      for (int a : mults) {
        const int n = g[i] + g[j] + a;
        auto it = iz1.find(n);
        if (it == iz1.end()) it = iz1.emplace(n, k.iz1(n)).first;
        Vec v(g.size(), 0);
        v[j] = 1;
        v[i] = ctx.field().neg(1);
        if (!it->second.contains(v)) return false;
      }
  return true;
}

HomologyReport h1(IdealContext& ctx) { return koszul_report(ctx, HomologyTarget::H1); }
HomologyReport delta1(IdealContext& ctx) { return koszul_report(ctx, HomologyTarget::Delta1); }
HomologyReport b1_mod_iz1(IdealContext& ctx) { return koszul_report(ctx, HomologyTarget::B1modIZ1); }

HomologyReport tor1_self(IdealContext& ctx) {
  require_inside_ring(ctx.ideal());
  if (ctx.ideal().is_principal()) {
    HomologyReport z;
    z.killed_by_m = z.killed_by_y = z.stabilized = true;
    return z;
  }
  return koszul_report(ctx, HomologyTarget::Tor1Self);
}

HomologyReport tor1_self_resolution(IdealContext& ctx) {
  require_inside_ring(ctx.ideal());
  return stable(ctx, [](IdealContext& c) {
    const auto& s = c.semigroup();
    const auto& f = c.field();
    const auto& i = c.ideal();
    const GradedMatrix& d0 = c.differential(0);
    if (d0.cols() == 0) {
      HomologyReport z;
      z.killed_by_m = z.killed_by_y = true;
      return z;
    }
    const GradedMatrix& d1 = c.differential(1);
    const auto& g = c.gens();
    const auto& cs = d0.col_shifts();
    const std::size_t b1 = d0.cols();
    Subquotient q;
    q.lo = *std::min_element(cs.begin(), cs.end());
    q.hi = *std::max_element(cs.begin(), cs.end()) + i.full_from();
    c.ring().ensure_reportable(q.hi);
    q.num = [&, b1](int n) {
      std::vector<std::size_t> rows;
      for (std::size_t r = 0; r < g.size(); ++r)
        if (s.contains(n - g[r]) && !i.contains(n - g[r])) rows.push_back(r);
      auto cols = active_columns(s, cs, n);
      auto ker = kernel(f, d0.coeffs(), rows, cols);
      return Subspace::span(f, b1, ker);
    };
    q.den = [&, b1](int n) {
      Subspace sp(f, b1);
      for (auto l : active_columns(s, d1.col_shifts(), n)) sp.insert(d1.coeffs().column(l));
      for (std::size_t j = 0; j < b1; ++j)
        if (i.contains(n - cs[j])) sp.insert(unit_vec(b1, j));
      return sp;
    };
    return evaluate(s, HomologyTarget::Tor1Self, q);
  });
}

HomologyReport ext_i(IdealContext& ctx, ExtTarget target, int idx) {
  if (idx < 1) throw Error(ErrorKind::InvalidInput, "Ext index must be positive");
  auto rep = stable(ctx, [target, idx](IdealContext& c) {
    std::optional<MonomialIdeal> hold;
    const MonomialIdeal& e = ext_target_ideal(c, target, hold);
    const GradedMatrix& m = c.differential(idx - 1);
    const auto& s = c.semigroup();
    const auto& f = c.field();
    HomologyReport z;
    z.target = ext_tag(target, idx);
    if (m.cols() == 0) {
      z.killed_by_m = z.killed_by_y = true;
      return z;
    }
    const auto& rs = m.row_shifts();
    const auto& cs = m.col_shifts();
    const DenseMatrix ct = m.coeffs().transpose();
    const std::size_t amb = m.rows();
    // Maps to E from Hom(F_i, E)_n are C^T lambda; lambda is determined modulo N.
    Subspace left = Subspace::span(f, amb, kernel(f, ct));
    Subquotient q;
    q.lo = e.min_degree() - *std::max_element(cs.begin(), cs.end());
    q.hi = e.full_from() - *std::min_element(rs.begin(), rs.end());
    q.num = [&, amb](int n) {
      std::vector<std::size_t> dead;
      for (std::size_t j = 0; j < cs.size(); ++j)
        if (!e.contains(n + cs[j])) dead.push_back(j);
      return Subspace::span(f, amb, kernel(f, ct, dead, iota_n(amb)));
    };
    q.den = [&, amb](int n) {
      Subspace sp = left;
      for (std::size_t k = 0; k < amb; ++k)
        if (e.contains(n + rs[k])) sp.insert(unit_vec(amb, k));
      return sp;
    };
    HomologyReport r = evaluate(s, z.target, q);
    r.index = idx;
    return r;
  });
  return rep;
}

HomologyReport ext_i_resolution(IdealContext& ctx, ExtTarget target, int idx) {
  if (idx < 1) throw Error(ErrorKind::InvalidInput, "Ext index must be positive");
  return stable(ctx, [target, idx](IdealContext& c) {
    std::optional<MonomialIdeal> hold;
    const MonomialIdeal& e = ext_target_ideal(c, target, hold);
    const auto& s = c.semigroup();
    const auto& f = c.field();
    const GradedMatrix& prev = c.differential(idx - 1);
    HomologyReport z;
    z.target = ext_tag(target, idx);
    z.index = idx;
    if (prev.cols() == 0) {
      z.killed_by_m = z.killed_by_y = true;
      return z;
    }
    const GradedMatrix& next = c.differential(idx);
    const auto& rs = prev.row_shifts();
    const auto& cs = prev.col_shifts();
    const std::size_t amb = prev.cols();
    const DenseMatrix nt = next.coeffs().transpose();
    Subquotient q;
    q.lo = e.min_degree() - *std::max_element(cs.begin(), cs.end());
    q.hi = e.full_from() - *std::min_element(rs.begin(), rs.end());
    q.num = [&, amb](int n) {
      std::vector<std::size_t> live;
      for (std::size_t j = 0; j < amb; ++j)
        if (e.contains(n + cs[j])) live.push_back(j);
      return Subspace::span(f, amb, kernel(f, nt, iota_n(nt.rows()), live));
    };
    q.den = [&, amb](int n) {
      Subspace sp(f, amb);
      for (std::size_t k = 0; k < rs.size(); ++k)
        if (e.contains(n + rs[k])) sp.insert(prev.coeffs().row(k));
      return sp;
    };
    HomologyReport r = evaluate(s, z.target, q);
    r.index = idx;
    return r;
  });
}

bool matlis_consistency(IdealContext& ctx) {
  auto tor = tor1_self(ctx);
  auto ext = ext_i(ctx, ExtTarget::CanonicalDual, 1);
  return tor.total_dim == ext.total_dim && tor.killed_by_y == ext.killed_by_y &&
         tor.killed_by_m == ext.killed_by_m;
}

namespace {

// Union-find over pair variables u_pq with a parity bit (u_a = +-u_b) and a zero flag.
class SignedUnionFind {
 public:
  explicit SignedUnionFind(std::size_t n) : parent_(n), parity_(n, 0), zero_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::pair<std::size_t, int> find(std::size_t a) {
    int par = 0;
    std::size_t r = a;
    while (parent_[r] != r) {
      par ^= parity_[r];
      r = parent_[r];
    }
    // Path compression with parity bookkeeping.
    int acc = par;
    while (parent_[a] != a) {
      std::size_t next = parent_[a];
      int p = parity_[a];
      parent_[a] = r;
      parity_[a] = static_cast<char>(acc);
      acc ^= p;
      a = next;
    }
    return {r, par};
  }
  // Impose u_a = (-1)^par u_b; a sign clash forces zero unless signs are ignored.
  void relate(std::size_t a, std::size_t b, int par, bool ignore_signs) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ignore_signs) par = pa = pb = 0;
    if (ra == rb) {
      if ((pa ^ pb) != par) zero_[ra] = 1;
      return;
    }
    parent_[ra] = rb;
    parity_[ra] = static_cast<char>(pa ^ pb ^ par);
    zero_[rb] = zero_[rb] || zero_[ra];
  }
  void set_zero(std::size_t a) { zero_[find(a).first] = 1; }
  bool is_zero(std::size_t a) { return zero_[find(a).first] != 0; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<char> parity_;
  std::vector<char> zero_;
};

struct WedgeDegree {
  std::vector<char> present;
  SignedUnionFind uf;
};

std::size_t pair_id(std::size_t p, std::size_t q, std::size_t mu) {
  if (p > q) std::swap(p, q);
  return p * mu + q;
}

WedgeDegree wedge_at(const NumericalSemigroup& s, const std::vector<int>& g, bool char2, int n) {
  const std::size_t mu = g.size();
  WedgeDegree w{std::vector<char>(mu * mu, 0), SignedUnionFind(mu * mu)};
  for (std::size_t p = 0; p < mu; ++p)
    for (std::size_t q = p + 1; q < mu; ++q) w.present[pair_id(p, q, mu)] = s.contains(n - g[p] - g[q]);
  for (std::size_t j = 0; j < mu; ++j) {
    // Relations from Z_1 in degree n - g_j: e_p ^ e_j = e_q ^ e_j for p, q in A_j.
    std::vector<std::size_t> a;
    for (std::size_t p = 0; p < mu; ++p)
      if (p != j && s.contains(n - g[j] - g[p])) a.push_back(p);
    const bool self = s.contains(n - 2 * g[j]);
    for (std::size_t k = 0; k < a.size(); ++k) {
      std::size_t id = pair_id(a[k], j, mu);
      if (self) w.uf.set_zero(id);
      if (k == 0) continue;
      int sign_k = a[k] < j ? 0 : 1;
      int sign_0 = a[0] < j ? 0 : 1;
      w.uf.relate(id, pair_id(a[0], j, mu), sign_k ^ sign_0, char2);
    }
  }
  return w;
}

}  // namespace

HomologyReport wedge2(IdealContext& ctx) {
  require_nonprincipal(ctx.ideal());
  return stable(ctx, [](IdealContext& c) {
    const auto& s = c.semigroup();
    const auto& g = c.gens();
    const std::size_t mu = g.size();
    const bool char2 = c.field().prime() == 2;
    HomologyReport rep;
    rep.target = HomologyTarget::Wedge2;
    const int lo = g[0] + g[1];
    const int hi = 2 * g.back() + s.conductor();
    c.ring().ensure_reportable(hi);
    for (int n = lo; n < hi; ++n) {
      auto w = wedge_at(s, g, char2, n);
      std::vector<char> seen(mu * mu, 0);
      int dim = 0;
      for (std::size_t id = 0; id < mu * mu; ++id) {
        if (!w.present[id] || w.uf.is_zero(id)) continue;
        auto r = w.uf.find(id).first;
        if (!seen[r]) {
          seen[r] = 1;
          ++dim;
        }
      }
      if (dim) {
        rep.dims[n] = dim;
        rep.total_dim += dim;
      }
    }
    // The generators x_p ^ x_q decide annihilation.
    std::map<int, WedgeDegree> at;
    auto killed_by = [&](int a) {
      for (std::size_t p = 0; p < mu; ++p)
        for (std::size_t q = p + 1; q < mu; ++q) {
          const int n = g[p] + g[q] + a;
          auto it = at.find(n);
          if (it == at.end()) it = at.emplace(n, wedge_at(s, g, char2, n)).first;
          if (!it->second.uf.is_zero(pair_id(p, q, mu))) return false;
        }
      return true;
    };
    rep.killed_by_y = killed_by(s.multiplicity());
    rep.killed_by_m = rep.killed_by_y;
    for (int a : s.generators())
      if (rep.killed_by_m && a != s.multiplicity()) rep.killed_by_m = killed_by(a);
    return rep;
  });
}

namespace {

// Exterior or symmetric square presented on pair coordinates with relations z * e_j.
HomologyReport square_generic(IdealContext& ctx, bool exterior) {
  require_nonprincipal(ctx.ideal());
  return stable(ctx, [exterior](IdealContext& c) {
    const auto& s = c.semigroup();
    const auto& f = c.field();
    const auto& g = c.gens();
    const std::size_t mu = g.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> id;
    for (std::size_t p = 0; p < mu; ++p)
      for (std::size_t q = exterior ? p + 1 : p; q < mu; ++q) {
        id[{p, q}] = pairs.size();
        pairs.emplace_back(p, q);
      }
    const std::size_t amb = pairs.size();
    Subquotient q;
    q.lo = g[0] + (exterior ? g[1] : g[0]);
    q.hi = 2 * g.back() + s.conductor() + (exterior ? 0 : s.multiplicity());
    c.ring().ensure_reportable(q.hi);
    q.num = [&, amb](int n) {
      Subspace sp(f, amb);
      for (std::size_t k = 0; k < amb; ++k)
        if (s.contains(n - g[pairs[k].first] - g[pairs[k].second])) sp.insert(unit_vec(amb, k));
      return sp;
    };
    q.den = [&, amb](int n) {
      Subspace sp(f, amb);
      for (std::size_t j = 0; j < mu; ++j) {
        auto a = active_columns(s, g, n - g[j]);
        // Basis e_p - e_{a0} of Z_1 in degree n - g_j, wedged or multiplied with e_j.
        auto image = [&](std::size_t p, Vec& v, bool negate) {
          if (exterior && p == j) return;
          Coeff c1 = 1;
          if (exterior && p > j) c1 = f.neg(c1);
          if (negate) c1 = f.neg(c1);
          std::size_t k = id.at({std::min(p, j), std::max(p, j)});
          v[k] = f.add(v[k], c1);
        };
        for (std::size_t k = 1; k < a.size(); ++k) {
          Vec v(amb, 0);
          image(a[k], v, false);
          image(a[0], v, true);
          sp.insert(std::move(v));
        }
      }
      return sp;
    };
    HomologyReport rep = evaluate(s, exterior ? HomologyTarget::Wedge2 : HomologyTarget::Sym2, q);
    if (!exterior) {
      rep.finite = !rep.dims.count(q.hi - 1);
      if (!rep.finite) rep.killed_by_m = rep.killed_by_y = false;
    }
    return rep;
  });
}

}  // namespace

HomologyReport wedge2_generic(IdealContext& ctx) { return square_generic(ctx, true); }
HomologyReport sym2(IdealContext& ctx) { return square_generic(ctx, false); }

MonomialIdeal trace_of_module(const TruncatedRing& r, const GradedMatrix& presentation) {
  if (presentation.has_unit_entry())
    throw Error(ErrorKind::NotMinimal, "presentation matrix has a unit entry");
  presentation.validate(r.semigroup());
  // Generators of M^* = ker(A^T); their entries generate the trace.
  GradedMatrix dual = syzygy(r, presentation.transpose());
  std::vector<int> degrees;
  for (std::size_t k = 0; k < dual.cols(); ++k)
    for (std::size_t j = 0; j < dual.rows(); ++j)
      if (dual.coeffs()(j, k)) degrees.push_back(dual.entry_degree(j, k));
  if (degrees.empty()) throw Error(ErrorKind::InvalidInput, "module has zero dual");
  return MonomialIdeal::from_degrees(r.semigroup(), degrees);
}

}  // namespace nsg
