// Command-line front end for semigroup reports, scenario checks and bulk scans.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "nsg/error.hpp"
#include "nsg/explorer.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kInconclusive = 2, kUsage = 3 };

struct Globals {
  std::uint32_t field = 101;
  std::optional<int> cap;
  int ext_depth = 3;
  int workers = 1;
  std::string out;
  bool json = false;
};

nsg::NumericalSemigroup semigroup(const std::vector<int>& gens) {
  return nsg::NumericalSemigroup::from_generators(std::span<const int>(gens));
}

void emit(const nsg::Json& doc, const Globals& g) {
  if (g.out.empty()) {
    std::cout << doc.dump(g.json ? -1 : 2) << '\n';
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw nsg::Error(nsg::ErrorKind::InvalidInput, "cannot open " + g.out);
  f << doc.dump(2) << '\n';
}

int cmd_info(const std::vector<int>& gens, const Globals& g) {
  auto s = semigroup(gens);
  auto doc = nsg::to_json(s);
  if (!s.is_dvr()) {
    doc["apery"] = s.apery(s.multiplicity());
    doc["symmetric"] = s.is_symmetric();
  }
  emit(doc, g);
  return kPass;
}

int cmd_classify(const std::vector<int>& gens, const Globals& g) {
  auto s = semigroup(gens);
  nsg::Json doc;
  doc["generators"] = s.generators();
  if (s.is_dvr()) doc["category"] = "dvr";
  else doc["classification"] = nsg::to_json(nsg::classify(s));
  emit(doc, g);
  return kPass;
}

struct IdealArgs {
  std::vector<int> degrees;
  bool trace = false;
  std::vector<int> colon;
  bool ulrich = false;
  bool report38 = false;
};

int cmd_ideal(const std::vector<int>& gens, const IdealArgs& a, const Globals& g) {
  auto s = semigroup(gens);
  auto I = nsg::MonomialIdeal::from_degrees(s, std::span<const int>(a.degrees));
  const bool all = !a.trace && a.colon.empty() && !a.ulrich && !a.report38;
  nsg::Json doc;
  doc["semigroup"] = s.generators();
  doc["ideal"] = nsg::to_json(I);
  if (all || a.trace) {
    doc["trace"] = nsg::trace_ideal(I).min_gens();
    doc["trace_single_colon"] = nsg::trace_via_single_colon(I, I.min_gens().front()).min_gens();
  }
  if (!a.colon.empty()) {
    auto J = nsg::MonomialIdeal::from_degrees(s, std::span<const int>(a.colon));
    doc["colon"] = nsg::to_json(nsg::colon(I, J));
  }
  if ((all && I.inside_ring()) || a.ulrich) doc["ulrich"] = nsg::is_ulrich_ideal(I);
  if (a.report38) doc["semigroup_conditions"] = nsg::to_json(nsg::theorem38_semigroup_report(I));
  emit(doc, g);
  return kPass;
}

int cmd_verify(const std::string& name, const Globals& g, bool prime_given) {
  std::vector<std::string> names = name == "all" ? nsg::scenario_names() : std::vector<std::string>{name};
  nsg::ScenarioOptions opt;
  if (prime_given) opt.prime = g.field;
  opt.cap = g.cap;
  opt.ext_depth = g.ext_depth;
  int status = kPass;
  nsg::Json docs = nsg::Json::array();
  for (const auto& n : names) {
    auto r = nsg::run_scenario(n, opt);
    const bool failed = std::any_of(r.assertions.begin(), r.assertions.end(),
                                    [](const nsg::AssertionResult& a) { return !a.passed; });
    if (failed) status = kFail;
    else if (r.inconclusive && status == kPass) status = kInconclusive;
    docs.push_back(nsg::to_json(r));
    if (!g.json) {
      std::cout << "scenario " << r.name << " over F_" << r.prime << '\n';
      for (const auto& a : r.assertions)
        std::cout << "  " << (a.passed ? "PASS " : "FAIL ") << a.name << " [" << a.source << "]"
                  << (a.detail.empty() ? "" : ": " + a.detail) << '\n';
      std::cout << (r.passed() ? "PASS" : r.inconclusive ? "INCONCLUSIVE" : "FAIL") << '\n';
    }
  }
  if (g.json) std::cout << (names.size() == 1 ? docs[0] : docs).dump() << '\n';
  return status;
}

int cmd_scan(nsg::ScanConfig cfg, const Globals& g) {
  cfg.prime = g.field;
  cfg.cap = g.cap;
  cfg.ext_depth = g.ext_depth;
  cfg.workers = g.workers;
  std::ofstream file;
  std::ostream* records = nullptr;
  if (!g.out.empty()) {
    file.open(g.out, std::ios::out | std::ios::trunc);
    if (!file) throw nsg::Error(nsg::ErrorKind::InvalidInput, "cannot open " + g.out);
    records = &file;
  }
  auto summary = nsg::run_scan(cfg, records);
  if (g.json) std::cout << nsg::to_json(summary).dump() << '\n';
  else std::cout << nsg::format_summary(summary);
  if (!summary.ok()) return kFail;
  return summary.q12_inconclusive || summary.battery_inconclusive ? kInconclusive : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical semigroup rings: traces, syzygies and annihilators of homology"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  auto* field_opt = app.add_option("--field", g.field, "Prime characteristic")->capture_default_str();
  app.add_option("--cap", g.cap, "Truncation degree of the graded engine");
  app.add_option("--ext-depth", g.ext_depth, "Depth of the Ext tail search")->capture_default_str();
  app.add_option("--workers", g.workers, "Worker threads for scans")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Output file");
  app.add_flag("--json", g.json, "Compact JSON output");

  std::vector<int> gens;
  auto* info = app.add_subcommand("info", "Invariants of a semigroup");
  info->add_option("gens", gens, "Generators")->required();

  auto* cls = app.add_subcommand("classify", "Gorenstein classification");
  cls->add_option("gens", gens, "Generators")->required();

  IdealArgs ia;
  auto* ideal = app.add_subcommand("ideal", "Monomial ideal arithmetic");
  ideal->add_option("gens", gens, "Generators of the semigroup")->required();
  ideal->add_option("-I,--ideal", ia.degrees, "Degrees generating the ideal")->required();
  ideal->add_flag("--trace", ia.trace, "Trace ideal");
  ideal->add_option("--colon", ia.colon, "Degrees of J; prints (I : J)");
  ideal->add_flag("--ulrich", ia.ulrich, "Ulrich test");
  ideal->add_flag("--report38", ia.report38, "Semigroup-level equivalent conditions");

  nsg::ReportOptions ro;
  std::vector<int> report_ideal;
  auto* report = app.add_subcommand("report", "Combined JSON report");
  report->add_option("gens", gens, "Generators")->required();
  auto* ropt = report->add_option("--ideal", report_ideal, "Ideal degrees");
  report->add_flag("--canonical", ro.canonical, "Use the canonical ideal");
  report->add_flag("--battery", ro.battery, "Run the equivalence battery");
  report->add_flag("--question12", ro.question12, "Run the Ext annihilation check");

  std::string scenario;
  auto* verify = app.add_subcommand("verify", "Run a named scenario");
  verify->add_option("scenario", scenario, "Scenario name or 'all'")
      ->required()
      ->check(CLI::IsMember([] {
        auto v = nsg::scenario_names();
        v.push_back("all");
        return v;
      }()));

  nsg::ScanConfig sc;
  std::optional<int> max_genus, max_frob;
  std::vector<std::string> checks{"classify"};
  auto* scan = app.add_subcommand("scan", "Enumerate semigroups and check properties");
  auto* mg = scan->add_option("--max-genus", max_genus, "Genus bound");
  auto* mf = scan->add_option("--max-frobenius", max_frob, "Frobenius bound");
  mg->excludes(mf);
  scan->add_flag("--minimal-multiplicity", sc.minimal_multiplicity_only, "Only minimal multiplicity");
  scan->add_option("--multiplicity", sc.multiplicity, "Only this multiplicity");
  scan->add_option("--embdim", sc.embedding_dimension, "Only this embedding dimension");
  scan->add_option("--checks", checks, "classify, battery, question12")
      ->delimiter(',')
      ->check(CLI::IsMember({"classify", "battery", "question12"}));
  scan->add_option("--random-ideals", sc.random_ideals, "Random ideals per semigroup")->capture_default_str();
  scan->add_option("--seed", sc.seed, "Seed for random ideals");
  scan->add_flag("--timing", sc.timing, "Record per-semigroup time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    nsg::PrimeField check(g.field);
    if (*info) return cmd_info(gens, g);
    if (*cls) return cmd_classify(gens, g);
    if (*ideal) return cmd_ideal(gens, ia, g);
    if (*report) {
      if (*ropt) ro.ideal = report_ideal;
      ro.prime = g.field;
      ro.cap = g.cap;
      ro.ext_depth = g.ext_depth;
      auto out = nsg::cmd_report(gens, ro);
      emit(out.doc, g);
      return out.status;
    }
    if (*verify) return cmd_verify(scenario, g, field_opt->count() > 0);
    if (*scan) {
      if (max_genus) sc.bound = nsg::EnumerationBound::genus(*max_genus);
      else if (max_frob) sc.bound = nsg::EnumerationBound::frobenius(*max_frob);
      sc.checks.clear();
      for (const auto& c : checks)
        sc.checks.insert(c == "battery" ? nsg::ScanCheck::Battery
                         : c == "question12" ? nsg::ScanCheck::Question12
                                             : nsg::ScanCheck::Classify);
      return cmd_scan(sc, g);
    }
  } catch (const nsg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case nsg::ErrorKind::CertificateNotFound:
        return kInconclusive;
      case nsg::ErrorKind::GcdNotOne:
      case nsg::ErrorKind::EmptyInput:
      case nsg::ErrorKind::EmptyGenerators:
      case nsg::ErrorKind::BoundTooLarge:
      case nsg::ErrorKind::NotPrime:
      case nsg::ErrorKind::InvalidInput:
      case nsg::ErrorKind::DvrInput:
        return kUsage;
      default:
        return kFail;
    }
  }
  return kUsage;
}
