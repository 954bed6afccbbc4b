#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "nsg/homology.hpp"

namespace nsg {

using Json = nlohmann::ordered_json;

Json to_json(const NumericalSemigroup& s);
Json to_json(const MonomialIdeal& i);
Json to_json(const GradedMatrix& m, const PrimeField& f);
Json to_json(const HomologyReport& r);
Json to_json(const SemigroupConditions& c);
Json to_json(const Classification& c);
Json to_json(const Z1IsoCertificate& c);
Json to_json(const ExtTailResult& t);
Json to_json(const Theorem38Battery& b);
Json to_json(const Question12Result& q);
// Entries given as [i, j, [[degree, coeff], ...]]; coefficients may be signed.
GradedMatrix matrix_from_json(const Json& j, const PrimeField& f);

// Named, baked verifications of worked examples.
struct AssertionResult {
  std::string name;
  bool passed = false;
  std::string detail;
  std::string source;  // "reference" (published value) or "oracle" (independent computation)
};

struct ScenarioOptions {
  std::optional<std::uint32_t> prime;  // scenario default when unset
  std::optional<int> cap;
  int ext_depth = 3;
};

struct ScenarioResult {
  std::string name;
  std::uint32_t prime = 0;
  std::vector<AssertionResult> assertions;
  bool inconclusive = false;
  bool passed() const;
};

const std::vector<std::string>& scenario_names();
ScenarioResult run_scenario(const std::string& name, const ScenarioOptions& opt = {});
Json to_json(const ScenarioResult& r);

// The twenty semigroups checked by the Z_1(m) scenario.
const std::vector<std::vector<int>>& bundled_corollary_semigroups();
// Parsed baked data of the worked example over <5,6,13,14>.
Json section5_data();

enum class ScanCheck { Classify, Battery, Question12 };

struct ScanConfig {
  EnumerationBound bound = EnumerationBound::genus(10);
  bool minimal_multiplicity_only = false;
  std::optional<int> multiplicity;
  std::optional<int> embedding_dimension;
  std::set<ScanCheck> checks{ScanCheck::Classify};
  std::uint32_t prime = 101;
  std::optional<int> cap;
  int ext_depth = 3;
  int workers = 1;
  int random_ideals = 5;  // per semigroup, battery mode
  std::uint64_t seed = 0x5eed;
  bool timing = false;
};

// Property checks accumulated over a scan; each counts runs and failures.
struct CheckTally {
  long long runs = 0;
  long long failures = 0;
  std::vector<std::string> first_failures;
  void record(bool ok, const std::string& what);
};

struct ScanSummary {
  long long records = 0;
  long long expected_records = 0;
  long long errors = 0;
  std::map<std::string, long long> categories;
  long long battery_runs = 0;
  long long battery_disagreements = 0;
  long long battery_inconclusive = 0;
  long long q12_runs = 0;
  long long q12_inconclusive = 0;
  std::vector<std::vector<int>> counterexamples;
  std::map<std::string, CheckTally> checks;
  bool ok() const;
};

// Streams one NDJSON record per semigroup, in (genus, generators) order.
ScanSummary run_scan(const ScanConfig& cfg, std::ostream* records);
std::string format_summary(const ScanSummary& s);
Json to_json(const ScanSummary& s);

// Ideals used by battery scans: m, the canonical ideal (when nonprincipal) and seeded randoms.
std::vector<std::pair<std::string, MonomialIdeal>> scan_ideals(const NumericalSemigroup& s,
                                                                int random_count, std::uint64_t seed);
MonomialIdeal random_monomial_ideal(const NumericalSemigroup& s, std::uint64_t seed);

struct ReportOptions {
  std::optional<std::vector<int>> ideal;
  bool canonical = false;
  bool battery = false;
  bool question12 = false;
  std::uint32_t prime = 101;
  std::optional<int> cap;
  int ext_depth = 3;
};

// Exit-status hint: 0 pass, 1 failure, 2 inconclusive.
struct ReportOutput {
  Json doc;
  int status = 0;
};

ReportOutput cmd_report(const std::vector<int>& gens, const ReportOptions& opt);

}  // namespace nsg
