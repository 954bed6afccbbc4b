#include "nsg/semigroup.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <limits>
#include <queue>
#include <string>
#include <thread>

#include "nsg/error.hpp"

namespace nsg {

struct NumericalSemigroup::Data {
  std::vector<int> gens;
  int frobenius = -1;
  int genus = 0;
  std::vector<int> gaps;
  std::vector<int> pf;
  std::vector<char> member;  // membership on [0, sieve_bound)
  std::vector<std::vector<int>> apery;  // parallel to gens
};

namespace {

// Smallest element of the semigroup in each residue class mod m (Dijkstra on residues).
std::vector<long long> residue_minima(int m, const std::vector<int>& gens) {
  const long long inf = std::numeric_limits<long long>::max();
  std::vector<long long> w(static_cast<std::size_t>(m), inf);
  using Item = std::pair<long long, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  w[0] = 0;
  pq.push({0, 0});
  while (!pq.empty()) {
    auto [d, r] = pq.top();
    pq.pop();
    if (d != w[static_cast<std::size_t>(r)]) continue;
    for (int g : gens) {
      int r2 = static_cast<int>((r + g) % m);
      if (d + g < w[static_cast<std::size_t>(r2)]) {
        w[static_cast<std::size_t>(r2)] = d + g;
        pq.push({d + g, r2});
      }
    }
  }
  return w;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::initializer_list<int> raw) {
  std::vector<int> v(raw);
  return from_generators(std::span<const int>(v));
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const int> raw) {
  std::vector<int> cand;
  for (int g : raw) {
    if (g < 0) throw Error(ErrorKind::InvalidInput, "negative generator " + std::to_string(g));
    if (g > 0) cand.push_back(g);
  }
  if (cand.empty()) throw Error(ErrorKind::EmptyInput, "no positive generators");
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  int g0 = 0;
  for (int g : cand) g0 = std::gcd(g0, g);
  if (g0 != 1) throw Error(ErrorKind::GcdNotOne, "gcd of generators is " + std::to_string(g0));

  const int m = cand.front();
  auto w = residue_minima(m, cand);
  long long frob = *std::max_element(w.begin(), w.end()) - m;
  if (frob > 1'000'000) throw Error(ErrorKind::BoundTooLarge, "Frobenius number too large");

  auto d = std::make_shared<Data>();
  d->frobenius = static_cast<int>(frob);
  const int c = d->frobenius + 1;
  auto in_s = [&](long long z) { return z >= 0 && z >= w[static_cast<std::size_t>(z % m)]; };

  // Minimal generators: members that are not a sum of two nonzero members.
  for (int g : cand) {
    bool decomposable = false;
    for (int s = 1; s <= g / 2 && !decomposable; ++s)
      decomposable = in_s(s) && in_s(g - s);
    if (!decomposable) d->gens.push_back(g);
  }
  const int maxg = d->gens.back();
  const int bound = c + maxg + 1;
  d->member.assign(static_cast<std::size_t>(bound), 0);
  for (int z = 0; z < bound; ++z) d->member[static_cast<std::size_t>(z)] = in_s(z) ? 1 : 0;
  for (int z = 1; z < c; ++z)
    if (!in_s(z)) d->gaps.push_back(z);
  d->genus = static_cast<int>(d->gaps.size());
  for (int f : d->gaps) {
    bool ok = std::all_of(d->gens.begin(), d->gens.end(), [&](int g) { return in_s(f + g); });
    if (ok) d->pf.push_back(f);
  }
  for (int a : d->gens) {
    std::vector<int> ap(static_cast<std::size_t>(a), -1);
    for (int z = 0; z <= d->frobenius + a; ++z)
      if (in_s(z) && !in_s(z - a)) ap[static_cast<std::size_t>(z % a)] = z;
    if (a == 1) ap[0] = 0;
    d->apery.push_back(std::move(ap));
  }
  return NumericalSemigroup(std::move(d));
}

const std::vector<int>& NumericalSemigroup::generators() const noexcept { return d_->gens; }
int NumericalSemigroup::multiplicity() const noexcept { return d_->gens.front(); }
int NumericalSemigroup::embedding_dimension() const noexcept { return static_cast<int>(d_->gens.size()); }
int NumericalSemigroup::max_generator() const noexcept { return d_->gens.back(); }
int NumericalSemigroup::frobenius() const noexcept { return d_->frobenius; }
int NumericalSemigroup::conductor() const noexcept { return d_->frobenius + 1; }
int NumericalSemigroup::genus() const noexcept { return d_->genus; }
const std::vector<int>& NumericalSemigroup::gaps() const noexcept { return d_->gaps; }
const std::vector<int>& NumericalSemigroup::pseudo_frobenius() const noexcept { return d_->pf; }
int NumericalSemigroup::type() const noexcept { return static_cast<int>(d_->pf.size()); }
bool NumericalSemigroup::is_dvr() const noexcept { return d_->gens.front() == 1; }

bool NumericalSemigroup::has_minimal_multiplicity() const noexcept {
  return multiplicity() == embedding_dimension();
}

bool NumericalSemigroup::contains(int z) const noexcept {
  if (z < 0) return false;
  if (z >= static_cast<int>(d_->member.size())) return true;
  return d_->member[static_cast<std::size_t>(z)] != 0;
}

bool NumericalSemigroup::is_symmetric() const {
  const int f = frobenius();
  for (int z = 0; z <= f; ++z)
    if (contains(z) == contains(f - z)) return false;
  return true;
}

const std::vector<int>& NumericalSemigroup::apery(int m) const {
  auto it = std::find(d_->gens.begin(), d_->gens.end(), m);
  if (it == d_->gens.end())
    throw Error(ErrorKind::NotAGenerator, std::to_string(m) + " is not a minimal generator");
  return d_->apery[static_cast<std::size_t>(it - d_->gens.begin())];
}

bool NumericalSemigroup::operator==(const NumericalSemigroup& o) const noexcept {
  return d_ == o.d_ || d_->gens == o.d_->gens;
}

bool NumericalSemigroup::operator<(const NumericalSemigroup& o) const noexcept {
  return d_->gens < o.d_->gens;
}

// Genus-tree enumeration. Every cap keeps F < 64, so the gap set fits one word.
namespace {

struct Node {
  std::uint64_t gaps;
  int frobenius;
  int genus;
};

bool member(const Node& n, int z) { return z >= 0 && (z >= 64 || !((n.gaps >> z) & 1u)); }

int node_multiplicity(const Node& n) {
  int z = 1;
  while (!member(n, z)) ++z;
  return z;
}

std::vector<int> node_generators(const Node& n) {
  std::vector<int> gens;
  const int m = node_multiplicity(n);
  const int hi = std::max(n.frobenius + m, m);
  for (int g = m; g <= hi; ++g) {
    if (!member(n, g)) continue;
    bool dec = false;
    for (int s = 1; s <= g / 2 && !dec; ++s) dec = member(n, s) && member(n, g - s);
    if (!dec) gens.push_back(g);
  }
  return gens;
}

bool within(EnumerationBound b, int genus, int frob) {
  return b.kind == EnumerationBound::Kind::MaxGenus ? genus <= b.value : frob <= b.value;
}

template <class Visit>
void descend(const Node& n, EnumerationBound b, Visit& visit) {
  visit(n);
  if (b.kind == EnumerationBound::Kind::MaxGenus && n.genus >= b.value) return;
  for (int g : node_generators(n)) {
    if (g <= n.frobenius) continue;
    Node child{n.gaps | (std::uint64_t{1} << g), g, n.genus + 1};
    if (within(b, child.genus, child.frobenius)) descend(child, b, visit);
  }
}

void check_bound(EnumerationBound b) {
  if (b.value < 0) throw Error(ErrorKind::InvalidInput, "negative enumeration bound");
  if (b.kind == EnumerationBound::Kind::MaxGenus && b.value > kMaxGenusCap)
    throw Error(ErrorKind::BoundTooLarge, "genus bound above cap " + std::to_string(kMaxGenusCap));
  if (b.kind == EnumerationBound::Kind::MaxFrobenius && b.value > kMaxFrobeniusCap)
    throw Error(ErrorKind::BoundTooLarge,
                "Frobenius bound above cap " + std::to_string(kMaxFrobeniusCap));
}

}  // namespace

long long count_semigroups(EnumerationBound bound) {
  check_bound(bound);
  long long count = 0;
  auto visit = [&](const Node&) { ++count; };
  descend(Node{0, -1, 0}, bound, visit);
  return count;
}

std::vector<NumericalSemigroup> enumerate_semigroups(EnumerationBound bound,
                                                     const SemigroupPredicate& keep, int workers) {
  check_bound(bound);
  // Split the tree at a shallow frontier and hand subtrees to workers.
  std::vector<Node> frontier;
  std::vector<NumericalSemigroup> out;
  auto emit = [&](const Node& n, std::vector<NumericalSemigroup>& sink) {
    auto s = NumericalSemigroup::from_generators(node_generators(n));
    if (!keep || keep(s)) sink.push_back(std::move(s));
  };
  const int split_genus = 4;
  {
    std::vector<Node> stack{Node{0, -1, 0}};
    while (!stack.empty()) {
      Node n = stack.back();
      stack.pop_back();
      if (n.genus == split_genus) {
        frontier.push_back(n);
        continue;
      }
      emit(n, out);
      if (bound.kind == EnumerationBound::Kind::MaxGenus && n.genus >= bound.value) continue;
      for (int g : node_generators(n)) {
        if (g <= n.frobenius) continue;
        Node child{n.gaps | (std::uint64_t{1} << g), g, n.genus + 1};
        if (within(bound, child.genus, child.frobenius)) stack.push_back(child);
      }
    }
  }
  workers = std::max(1, workers);
  std::vector<std::vector<NumericalSemigroup>> partial(static_cast<std::size_t>(workers));
  std::atomic<std::size_t> next{0};
  auto work = [&](std::size_t w) {
    auto& sink = partial[w];
    auto visit = [&](const Node& n) { emit(n, sink); };
    for (std::size_t i = next++; i < frontier.size(); i = next++) descend(frontier[i], bound, visit);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, static_cast<std::size_t>(w));
    for (auto& t : pool) t.join();
  }
  for (auto& p : partial)
    for (auto& s : p) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
    if (a.genus() != b.genus()) return a.genus() < b.genus();
    return a < b;
  });
  return out;
}

}  // namespace nsg
