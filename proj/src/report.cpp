#include <algorithm>
#include <string>

#include "nsg/error.hpp"
#include "nsg/explorer.hpp"

namespace nsg {

Json to_json(const NumericalSemigroup& s) {
  Json j;
  j["generators"] = s.generators();
  j["multiplicity"] = s.multiplicity();
  j["embdim"] = s.embedding_dimension();
  j["frobenius"] = s.frobenius();
  j["conductor"] = s.conductor();
  j["genus"] = s.genus();
  j["type"] = s.type();
  j["pf"] = s.pseudo_frobenius();
  j["gaps"] = s.gaps();
  j["minimal_multiplicity"] = s.has_minimal_multiplicity();
  j["dvr"] = s.is_dvr();
  return j;
}

Json to_json(const MonomialIdeal& i) {
  Json j;
  j["min_gens"] = i.min_gens();
  j["min_degree"] = i.min_degree();
  j["full_from"] = i.full_from();
  return j;
}

Json to_json(const GradedMatrix& m, const PrimeField& f) {
  Json j;
  j["row_shifts"] = m.row_shifts();
  j["col_shifts"] = m.col_shifts();
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (auto e = m.entry(r, c))
        entries.push_back(Json::array({r, c, Json::array({Json::array({e->degree, f.to_signed(e->coeff)})})}));
  j["entries"] = std::move(entries);
  return j;
}

GradedMatrix matrix_from_json(const Json& j, const PrimeField& f) {
  auto rows = j.at("row_shifts").get<std::vector<int>>();
  auto cols = j.at("col_shifts").get<std::vector<int>>();
  DenseMatrix c(rows.size(), cols.size());
  for (const auto& e : j.at("entries")) {
    auto r = e.at(0).get<std::size_t>();
    auto k = e.at(1).get<std::size_t>();
    if (r >= rows.size() || k >= cols.size()) throw Error(ErrorKind::InvalidInput, "entry index out of range");
    for (const auto& term : e.at(2)) {
      const int deg = term.at(0).get<int>();
      if (deg != cols[k] - rows[r])
        throw Error(ErrorKind::InvalidInput, "entry degree " + std::to_string(deg) + " is not homogeneous");
      c(r, k) = f.add(c(r, k), f.from_int(term.at(1).get<long long>()));
    }
  }
  return GradedMatrix(std::move(rows), std::move(cols), std::move(c));
}

Json to_json(const HomologyReport& r) {
  Json j;
  j["target"] = std::string(to_string(r.target));
  if (r.target == HomologyTarget::ExtIR || r.target == HomologyTarget::ExtIDual) j["index"] = r.index;
  Json dims = Json::object();
  for (auto [d, v] : r.dims) dims[std::to_string(d)] = v;
  j["dims"] = std::move(dims);
  j["total"] = r.total_dim;
  j["killed_by_y"] = r.killed_by_y;
  j["killed_by_m"] = r.killed_by_m;
  j["stabilized"] = r.stabilized;
  j["finite"] = r.finite;
  return j;
}

Json to_json(const SemigroupConditions& c) {
  Json j;
  j["c1_colon_is_m"] = c.c1_colon_is_m;
  j["c2_trace_is_m"] = c.c2_trace_is_m;
  j["c8_y_in_colon"] = c.c8_y_in_colon;
  j["c14_y_in_trace"] = c.c14_y_in_trace;
  j["c15_iso_ideal_containing_y"] = c.c15_iso_ideal_containing_y;
  if (c.c15_iso_ideal_containing_y) j["c15_shift"] = c.c15_shift;
  j["all_agree"] = c.all_agree();
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  j["category"] = std::string(to_string(c.category));
  j["gorenstein"] = c.gorenstein;
  j["nearly"] = c.nearly;
  j["almost"] = c.almost;
  j["far_flung"] = c.far_flung;
  j["canonical"] = to_json(c.canonical.ideal);
  j["canonical_fractional"] = c.canonical.fractional.min_gens();
  j["canonical_shift"] = c.canonical.shift;
  j["trace"] = to_json(c.trace);
  return j;
}

Json to_json(const Z1IsoCertificate& c) {
  Json j;
  j["colons_are_m"] = c.colons_are_m;
  j["images_independent"] = c.images_independent;
  j["hilbert_equal"] = c.hilbert_equal;
  j["generator_degrees_equal"] = c.generator_degrees_equal;
  j["iso"] = c.iso;
  j["refuted"] = c.refuted;
  return j;
}

namespace {

Json tri(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

std::string pattern(const std::array<std::optional<bool>, 16>& c) {
  std::string s;
  for (const auto& v : c) s += v ? (*v ? 'T' : 'F') : '?';
  return s;
}

}  // namespace

Json to_json(const ExtTailResult& t) {
  Json j;
  j["killed"] = tri(t.killed);
  j["certificate_index"] = t.certificate_index;
  j["refuting_index"] = t.refuting_index;
  Json traces = Json::array();
  for (const auto& tr : t.syzygy_traces) traces.push_back(tr.min_gens());
  j["syzygy_traces"] = std::move(traces);
  Json reps = Json::array();
  for (const auto& r : t.reports) reps.push_back(to_json(r));
  j["ext_reports"] = std::move(reps);
  return j;
}

Json to_json(const Theorem38Battery& b) {
  Json j;
  j["pattern"] = pattern(b.conditions);
  Json conds = Json::array();
  for (const auto& v : b.conditions) conds.push_back(tri(v));
  j["conditions"] = std::move(conds);
  j["conclusive"] = b.conclusive;
  j["agreement"] = b.agreement;
  j["trace_routes_agree"] = b.trace_routes_agree;
  j["semigroup_conditions"] = to_json(b.semigroup);
  if (b.colon_trace) j["colon_trace"] = b.colon_trace->min_gens();
  if (b.presentation_trace) j["presentation_trace"] = b.presentation_trace->min_gens();
  j["ext1_dual"] = to_json(b.ext1_dual);
  j["tor1"] = to_json(b.tor1);
  j["wedge2"] = to_json(b.wedge);
  j["z1_iso"] = to_json(b.z1);
  j["ext_tail_m"] = to_json(b.tail_m);
  j["ext_tail_y"] = to_json(b.tail_y);
  return j;
}

Json to_json(const Question12Result& q) {
  Json j;
  j["status"] = std::string(to_string(q.status));
  j["m_kills_ext"] = tri(q.m_kills_ext);
  j["nearly_gorenstein"] = q.nearly_gorenstein;
  j["is_counterexample"] = q.is_counterexample;
  if (q.status != Q12Status::Vacuous) j["ext_tail"] = to_json(q.tail);
  return j;
}

ReportOutput cmd_report(const std::vector<int>& gens, const ReportOptions& opt) {
  auto s = NumericalSemigroup::from_generators(std::span<const int>(gens));
  ReportOutput out;
  Json& doc = out.doc;
  doc["semigroup"] = to_json(s);
  doc["field"] = opt.prime;
  if (s.is_dvr()) {
    doc["dvr"] = true;
    return out;
  }
  auto cls = classify(s);
  doc["gorenstein"] = cls.gorenstein;
  doc["classification"] = to_json(cls);

  std::optional<MonomialIdeal> ideal;
  if (opt.ideal) ideal = MonomialIdeal::from_degrees(s, std::span<const int>(*opt.ideal));
  else if (opt.canonical || opt.battery) ideal = cls.canonical.ideal;
  if (ideal) {
    Json ij = to_json(*ideal);
    ij["source"] = opt.ideal ? "given" : "canonical";
    ij["trace"] = trace_ideal(*ideal).min_gens();
    if (ideal->inside_ring()) ij["ulrich"] = is_ulrich_ideal(*ideal);
    doc["ideal"] = std::move(ij);
  }
  if (opt.battery) {
    if (!s.has_minimal_multiplicity() || ideal->is_principal() || !ideal->inside_ring()) {
      doc["battery"] = Json{{"skipped", "needs minimal multiplicity and a nonprincipal ideal inside R"}};
    } else {
      IdealContext ctx(TruncatedRing(s, opt.prime, opt.cap), *ideal);
      auto b = theorem38_battery(ctx, opt.ext_depth);
      doc["battery"] = to_json(b);
      if (!b.agreement) out.status = 1;
      else if (!b.conclusive) out.status = std::max(out.status, 2);
    }
  }
  if (opt.question12) {
    auto q = question12_check(s, opt.prime, opt.ext_depth, opt.cap);
    doc["question12"] = to_json(q);
    if (q.status == Q12Status::Inconclusive) out.status = std::max(out.status, 2);
  }
  return out;
}

}  // namespace nsg
