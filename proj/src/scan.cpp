#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "nsg/error.hpp"
#include "nsg/explorer.hpp"

namespace nsg {

void CheckTally::record(bool ok, const std::string& what) {
  ++runs;
  if (ok) return;
  ++failures;
  if (first_failures.size() < 5) first_failures.push_back(what);
}

bool ScanSummary::ok() const {
  if (errors != 0 || battery_disagreements != 0) return false;
  if (expected_records >= 0 && records != expected_records) return false;
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second.failures == 0; });
}

MonomialIdeal random_monomial_ideal(const NumericalSemigroup& s, std::uint64_t seed) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  for (int g : s.generators()) words.push_back(static_cast<std::uint32_t>(g));
  std::seed_seq seq(words.begin(), words.end());
  std::mt19937_64 rng(seq);
  const int e = s.multiplicity();
  std::vector<int> pool;
  for (int z = e; z <= 2 * s.conductor() + e; ++z)
    if (s.contains(z)) pool.push_back(z);
  std::uniform_int_distribution<int> count(2, 5);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<int> degs;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) degs.push_back(pool[pick(rng)]);
    auto i = MonomialIdeal::from_degrees(s, std::span<const int>(degs));
    if (!i.is_principal()) return i;
  }
  return MonomialIdeal::maximal(s);
}

std::vector<std::pair<std::string, MonomialIdeal>> scan_ideals(const NumericalSemigroup& s, int random_count,
                                                                std::uint64_t seed) {
  std::vector<std::pair<std::string, MonomialIdeal>> out;
  out.emplace_back("m", MonomialIdeal::maximal(s));
  auto w = canonical_ideal(s).ideal;
  if (!w.is_principal()) out.emplace_back("canonical", w);
  for (int k = 0; k < random_count; ++k)
    out.emplace_back("random-" + std::to_string(k), random_monomial_ideal(s, seed + static_cast<std::uint64_t>(k)));
  return out;
}

namespace {

struct Outcome {
  Json record;
  ScanSummary delta;
};

std::string label(const NumericalSemigroup& s, const std::string& what) {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < s.generators().size(); ++i) os << (i ? "," : "") << s.generators()[i];
  os << "> " << what;
  return os.str();
}

bool in_far_flung_family(const NumericalSemigroup& s, int& ell) {
  const auto& g = s.generators();
  const int e = s.multiplicity();
  if (e < 3 || static_cast<int>(g.size()) != e) return false;
  if ((g[1] - 1) % e != 0) return false;
  ell = (g[1] - 1) / e;
  if (ell < 2) return false;
  for (int k = 1; k < e; ++k)
    if (g[static_cast<std::size_t>(k)] != ell * e + k) return false;
  return true;
}

int choose2(int n) { return n * (n - 1) / 2; }

// Ideal arithmetic identities: trace routes, flip, and the Ulrich statements.
void ideal_checks(const NumericalSemigroup& s, const Classification& cls, const std::string& name,
                  const MonomialIdeal& I, ScanSummary& d) {
  const auto tr = trace_ideal(I);
  bool routes = true;
  for (int x : I.min_gens()) routes = routes && trace_via_single_colon(I, x) == tr;
  d.checks["trace_routes"].record(routes, label(s, name + " " + I.to_string()));

  bool flip = true;
  const auto& g = I.min_gens();
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b)
      flip = flip && shift(colon(MonomialIdeal::principal(s, g[b]), I), g[a]) ==
                         shift(colon(MonomialIdeal::principal(s, g[a]), I), g[b]);
  d.checks["flip_identity"].record(flip, label(s, name + " " + I.to_string()));

  if (!s.has_minimal_multiplicity() || I.is_principal() || !I.inside_ring()) return;
  const auto m = MonomialIdeal::maximal(s);
  const auto x_colon = colon(MonomialIdeal::principal(s, g.front()), I);
  const auto omega_i = product(cls.canonical.ideal, I);
  const bool suite = is_ulrich_ideal(x_colon) && is_ulrich_ideal(tr) && is_ulrich_ideal(omega_i);
  d.checks["ulrich_suite"].record(suite, label(s, name + " " + I.to_string()));
  bool reduction = true;
  for (const auto* j : {&I, &x_colon, &tr, &omega_i})
    if (j->subset_of(m) && j->contains(s.multiplicity()) && is_ulrich_ideal(*j)) reduction = reduction && *j == m;
  d.checks["ulrich_reduction"].record(reduction, label(s, name + " " + I.to_string()));
}

void battery_checks(const NumericalSemigroup& s, const Classification& cls, const ScanConfig& cfg,
                    const std::string& name, const MonomialIdeal& I, Json& out, ScanSummary& d) {
  IdealContext ctx(TruncatedRing(s, cfg.prime, cfg.cap), I);
  const auto what = label(s, name + " " + I.to_string());
  auto b = theorem38_battery(ctx, cfg.ext_depth);
  ++d.battery_runs;
  if (!b.agreement) ++d.battery_disagreements;
  if (!b.conclusive) ++d.battery_inconclusive;
  d.checks["battery_agreement"].record(b.agreement, what + " " + to_json(b).dump());

  Json j;
  j["ideal"] = name;
  j["gens"] = I.min_gens();
  j["pattern"] = to_json(b)["pattern"];
  j["agreement"] = b.agreement;
  j["conclusive"] = b.conclusive;

  d.checks["stabilization"].record(b.ext1_dual.stabilized && b.tor1.stabilized && b.wedge.stabilized, what);
  d.checks["matlis_consistency"].record(matlis_consistency(ctx), what);

  const auto row = GradedMatrix::generator_row(I);
  const auto& d0 = ctx.differential(0);
  const auto& d1 = ctx.differential(1);
  bool two = true;
  for (std::size_t c = 0; c < d0.cols(); ++c) two = two && d0.nonzeros_in_column(c) == 2;
  d.checks["two_entry_columns"].record(two, what);
  const auto& f = ctx.field();
  d.checks["resolution_exact_minimal"].record(multiply(f, row, d0).coeffs().is_zero() &&
                                                  multiply(f, d0, d1).coeffs().is_zero() &&
                                                  !d0.has_unit_entry() && !d1.has_unit_entry(),
                                              what);

  auto del = delta1(ctx);
  j["tor1_total"] = b.tor1.total_dim;
  j["delta1_total"] = del.total_dim;
  if (b.tor1.killed_by_m)
    d.checks["tor1_dimension_formula"].record(b.tor1.total_dim == choose2(I.mu()) + del.total_dim, what);
  if (name == "canonical" && cls.nearly) {
    const int r = s.type();
    auto ext = ext_i(ctx, ExtTarget::R, 1);
    d.checks["ext1_dimension_formula"].record(ext.total_dim == r * r - r - 1, what);
    d.checks["delta1_dimension_formula"].record(del.total_dim == choose2(r) - 1, what);
  }
  out.push_back(std::move(j));
}

Outcome process(const NumericalSemigroup& s, const ScanConfig& cfg) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  Outcome o;
  auto& rec = o.record;
  auto& d = o.delta;
  d.records = 1;
  d.expected_records = 0;
  rec["generators"] = s.generators();
  rec["e"] = s.multiplicity();
  rec["n"] = s.embedding_dimension();
  rec["F"] = s.frobenius();
  rec["r"] = s.type();
  rec["genus"] = s.genus();
  try {
    if (s.is_dvr()) {
      rec["category"] = "dvr";
      ++d.categories["dvr"];
    } else {
      const auto cls = classify(s);
      const std::string cat(to_string(cls.category));
      rec["category"] = cat;
      rec["flags"] = Json{{"gorenstein", cls.gorenstein},
                          {"nearly", cls.nearly},
                          {"almost", cls.almost},
                          {"far_flung", cls.far_flung}};
      ++d.categories[cat];
      const bool mm = s.has_minimal_multiplicity();
      rec["minimal_multiplicity"] = mm;
      if (mm) d.checks["minimal_multiplicity_type"].record(s.type() == s.multiplicity() - 1, label(s, "type"));
      int ell = 0;
      if (in_far_flung_family(s, ell))
        d.checks["far_flung_family"].record(cls.far_flung && !cls.nearly && s.frobenius() == ell * s.multiplicity() - 1,
                                            label(s, "family"));

      const auto ideals = scan_ideals(s, cfg.random_ideals, cfg.seed);
      for (const auto& [name, I] : ideals) {
        ideal_checks(s, cls, name, I, d);
        if (mm && I.inside_ring() && !I.is_principal()) {
          auto sc = theorem38_semigroup_report(I);
          d.checks["semigroup_conditions_agree"].record(sc.all_agree(), label(s, name + " " + I.to_string()));
        }
      }

      if (cfg.checks.count(ScanCheck::Battery) && mm) {
        Json bats = Json::array();
        for (const auto& [name, I] : ideals) battery_checks(s, cls, cfg, name, I, bats, d);
        rec["battery"] = std::move(bats);
      }
    }
    if (cfg.checks.count(ScanCheck::Question12)) {
      auto q = question12_check(s, cfg.prime, cfg.ext_depth, cfg.cap);
      ++d.q12_runs;
      if (q.status == Q12Status::Inconclusive) ++d.q12_inconclusive;
      if (q.is_counterexample) d.counterexamples.push_back(s.generators());
      if (s.has_minimal_multiplicity() && !s.is_dvr())
        d.checks["question12_minimal_multiplicity"].record(!q.is_counterexample && q.status != Q12Status::Inconclusive,
                                                           label(s, "ext annihilation"));
      rec["question12"] =
          Json{{"status", std::string(to_string(q.status))}, {"is_counterexample", q.is_counterexample}};
    }
  } catch (const std::exception& e) {
    ++d.errors;
    rec["error"] = e.what();
  }
  if (cfg.timing)
    rec["ms"] = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  return o;
}

void merge(ScanSummary& into, ScanSummary&& d) {
  into.records += d.records;
  into.errors += d.errors;
  for (auto& [k, v] : d.categories) into.categories[k] += v;
  into.battery_runs += d.battery_runs;
  into.battery_disagreements += d.battery_disagreements;
  into.battery_inconclusive += d.battery_inconclusive;
  into.q12_runs += d.q12_runs;
  into.q12_inconclusive += d.q12_inconclusive;
  for (auto& c : d.counterexamples) into.counterexamples.push_back(std::move(c));
  for (auto& [k, t] : d.checks) {
    auto& dst = into.checks[k];
    dst.runs += t.runs;
    dst.failures += t.failures;
    for (auto& f : t.first_failures)
      if (dst.first_failures.size() < 5) dst.first_failures.push_back(std::move(f));
  }
}

}  // namespace

ScanSummary run_scan(const ScanConfig& cfg, std::ostream* records) {
  const bool filtered = cfg.minimal_multiplicity_only || cfg.multiplicity || cfg.embedding_dimension;
  SemigroupPredicate keep;
  if (filtered)
    keep = [&cfg](const NumericalSemigroup& s) {
      if (cfg.minimal_multiplicity_only && !s.has_minimal_multiplicity()) return false;
      if (cfg.multiplicity && s.multiplicity() != *cfg.multiplicity) return false;
      if (cfg.embedding_dimension && s.embedding_dimension() != *cfg.embedding_dimension) return false;
      return true;
    };
  const auto list = enumerate_semigroups(cfg.bound, keep, cfg.workers);

  ScanSummary summary;
  // The independent node count only applies to unfiltered scans.
  summary.expected_records = filtered ? static_cast<long long>(list.size()) : count_semigroups(cfg.bound);

  std::vector<std::optional<Outcome>> slots(list.size());
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < list.size();) {
      auto o = process(list[i], cfg);
      std::lock_guard lock(mu);
      slots[i] = std::move(o);
      cv.notify_one();
    }
  };

  std::vector<std::thread> pool;
  const int workers = std::max(1, cfg.workers);
  if (workers > 1)
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);

  // Single writer: records leave in enumeration order, one flushed line each.
  for (std::size_t i = 0; i < list.size(); ++i) {
    Outcome o;
    if (workers > 1) {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return slots[i].has_value(); });
      o = std::move(*slots[i]);
      slots[i].reset();
    } else {
      o = process(list[i], cfg);
    }
    if (records) *records << o.record.dump() << '\n' << std::flush;
    merge(summary, std::move(o.delta));
  }
  for (auto& t : pool) t.join();
  return summary;
}

Json to_json(const ScanSummary& s) {
  Json j;
  j["records"] = s.records;
  j["expected_records"] = s.expected_records;
  j["errors"] = s.errors;
  j["categories"] = s.categories;
  j["battery_runs"] = s.battery_runs;
  j["battery_disagreements"] = s.battery_disagreements;
  j["battery_inconclusive"] = s.battery_inconclusive;
  j["question12_runs"] = s.q12_runs;
  j["question12_inconclusive"] = s.q12_inconclusive;
  j["counterexamples"] = s.counterexamples;
  Json checks = Json::object();
  for (const auto& [k, t] : s.checks)
    checks[k] = Json{{"runs", t.runs}, {"failures", t.failures}, {"first_failures", t.first_failures}};
  j["checks"] = std::move(checks);
  j["ok"] = s.ok();
  return j;
}

std::string format_summary(const ScanSummary& s) {
  std::ostringstream os;
  os << "records " << s.records << " (expected " << s.expected_records << "), errors " << s.errors << '\n';
  os << "categories:\n";
  for (const auto& [k, v] : s.categories) os << "  " << k << ": " << v << '\n';
  if (s.battery_runs)
    os << "battery runs " << s.battery_runs << ", disagreements " << s.battery_disagreements << ", inconclusive "
       << s.battery_inconclusive << '\n';
  if (s.q12_runs) os << "question12 runs " << s.q12_runs << ", inconclusive " << s.q12_inconclusive << '\n';
  for (const auto& c : s.counterexamples) {
    os << "** COUNTEREXAMPLE <";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ">\n";
  }
  os << "checks:\n";
  for (const auto& [k, t] : s.checks) {
    os << "  " << k << ": " << t.runs - t.failures << "/" << t.runs << '\n';
    for (const auto& f : t.first_failures) os << "    FAIL " << f << '\n';
  }
  if (s.battery_disagreements) os << "FATAL: battery disagreement, see battery_agreement failures above\n";
  os << (s.ok() ? "OK" : "FAILED") << '\n';
  return os.str();
}

}  // namespace nsg
