#include "exgraph/json_io.hpp"

namespace exg {

namespace {

Json set_to_json(const VertexSet& s) { return Json(s.ids()); }

VertexSet set_from_json(const Json& j) { return VertexSet(j.get<std::vector<int>>()); }

Json path_to_json(const Path& p) { return Json(p.vertices); }

Path path_from_json(const Json& j) { return Path{j.get<std::vector<int>>()}; }

} // namespace

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.order();
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const Json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Graph::from_edges(j.at("n").get<int>(), edges);
}

Json expansion_certificate_to_json(const ExpansionCertificate& c) {
  Json j;
  j["mode"] = c.mode == CertMode::exact ? "exact" : "sampled";
  j["verdict"] = c.verdict == CertVerdict::expander        ? "expander"
                 : c.verdict == CertVerdict::counterexample ? "counterexample"
                                                            : "inconclusive";
  if (c.witness) j["witness"] = set_to_json(*c.witness);
  j["sets_checked"] = c.sets_checked;
  j["eps1"] = c.eps1;
  j["k"] = c.k;
  return j;
}

ExpansionCertificate expansion_certificate_from_json(const Json& j) {
  ExpansionCertificate c;
  c.mode = j.at("mode") == "exact" ? CertMode::exact : CertMode::sampled;
  std::string v = j.at("verdict");
  c.verdict = v == "expander"        ? CertVerdict::expander
              : v == "counterexample" ? CertVerdict::counterexample
                                      : CertVerdict::inconclusive;
  if (j.contains("witness")) c.witness = set_from_json(j.at("witness"));
  c.sets_checked = j.at("sets_checked").get<std::uint64_t>();
  c.eps1 = j.at("eps1").get<double>();
  c.k = j.at("k").get<double>();
  return c;
}

Json kst_result_to_json(const KstResult& r) {
  Json j;
  j["verdict"] = r.verdict == KstVerdict::free_of        ? "free"
                 : r.verdict == KstVerdict::witness_found ? "witness"
                                                          : "inconclusive";
  if (r.witness) {
    j["s_side"] = set_to_json(r.witness->s_side);
    j["t_side"] = set_to_json(r.witness->t_side);
  }
  j["sets_checked"] = r.sets_checked;
  return j;
}

KstResult kst_result_from_json(const Json& j) {
  KstResult r;
  std::string v = j.at("verdict");
  r.verdict = v == "free"      ? KstVerdict::free_of
              : v == "witness" ? KstVerdict::witness_found
                               : KstVerdict::inconclusive;
  if (j.contains("s_side"))
    r.witness = KstWitness{set_from_json(j.at("s_side")), set_from_json(j.at("t_side"))};
  r.sets_checked = j.at("sets_checked").get<std::uint64_t>();
  return r;
}

Json hub_to_json(const Hub& h) {
  Json j;
  j["center"] = h.center;
  j["first_layer"] = h.first_layer;
  j["second_layer"] = h.second_layer;
  return j;
}

Hub hub_from_json(const Json& j) {
  Hub h;
  h.center = j.at("center").get<int>();
  h.first_layer = j.at("first_layer").get<std::vector<int>>();
  h.second_layer = j.at("second_layer").get<std::vector<std::vector<int>>>();
  return h;
}

Json unit_to_json(const Unit& u) {
  Json j;
  j["core"] = u.core;
  Json hubs = Json::array();
  for (const auto& h : u.hubs) hubs.push_back(hub_to_json(h));
  j["hubs"] = std::move(hubs);
  Json spokes = Json::array();
  for (const auto& s : u.spokes) spokes.push_back(path_to_json(s));
  j["spokes"] = std::move(spokes);
  return j;
}

Unit unit_from_json(const Json& j) {
  Unit u;
  u.core = j.at("core").get<int>();
  for (const auto& h : j.at("hubs")) u.hubs.push_back(hub_from_json(h));
  for (const auto& s : j.at("spokes")) u.spokes.push_back(path_from_json(s));
  return u;
}

Json expansion_to_json(const Expansion& f) {
  Json j;
  j["anchor"] = f.anchor;
  j["body"] = set_to_json(f.body);
  j["radius"] = f.radius;
  return j;
}

Expansion expansion_from_json(const Json& j) {
  return Expansion{j.at("anchor").get<int>(), set_from_json(j.at("body")),
                   j.at("radius").get<int>()};
}

Json adjuster_to_json(const Adjuster& a) {
  Json j;
  j["core1"] = a.core1;
  j["core2"] = a.core2;
  j["end1"] = expansion_to_json(a.end1);
  j["end2"] = expansion_to_json(a.end2);
  j["center"] = set_to_json(a.center);
  j["slack"] = a.slack;
  j["initial_length"] = a.initial_length;
  return j;
}

Adjuster adjuster_from_json(const Json& j) {
  Adjuster a;
  a.core1 = j.at("core1").get<int>();
  a.core2 = j.at("core2").get<int>();
  a.end1 = expansion_from_json(j.at("end1"));
  a.end2 = expansion_from_json(j.at("end2"));
  a.center = set_from_json(j.at("center"));
  a.slack = j.at("slack").get<int>();
  a.initial_length = j.at("initial_length").get<int>();
  return a;
}

Json octopus_to_json(const Octopus& o) {
  Json j;
  j["core"] = adjuster_to_json(o.core);
  j["designated_end"] = o.designated_end;
  Json arms = Json::array();
  for (const auto& a : o.arms) arms.push_back(adjuster_to_json(a));
  j["arms"] = std::move(arms);
  Json tentacles = Json::array();
  for (const auto& t : o.tentacles) tentacles.push_back(path_to_json(t));
  j["tentacles"] = std::move(tentacles);
  return j;
}

Octopus octopus_from_json(const Json& j) {
  Octopus o;
  o.core = adjuster_from_json(j.at("core"));
  o.designated_end = j.at("designated_end").get<int>();
  for (const auto& a : j.at("arms")) o.arms.push_back(adjuster_from_json(a));
  for (const auto& t : j.at("tentacles")) o.tentacles.push_back(path_from_json(t));
  return o;
}

Json subdivision_to_json(const SubdivisionCertificate& c) {
  Json j;
  j["k"] = c.k;
  j["ell"] = c.ell;
  j["branch"] = c.branch;
  Json paths = Json::array();
  for (const auto& p : c.paths) paths.push_back(path_to_json(p));
  j["paths"] = std::move(paths);
  return j;
}

SubdivisionCertificate subdivision_from_json(const Json& j) {
  SubdivisionCertificate c;
  c.k = j.at("k").get<int>();
  c.ell = j.at("ell").get<int>();
  c.branch = j.at("branch").get<std::vector<int>>();
  for (const auto& p : j.at("paths")) c.paths.push_back(path_from_json(p));
  return c;
}

Json spectrum_to_json(const CycleSpectrum& s) {
  Json j;
  j["exact"] = s.exact;
  j["lengths"] = s.lengths;
  if (!s.witnesses.empty()) {
    Json w = Json::object();
    for (const auto& [len, cyc] : s.witnesses) w[std::to_string(len)] = cyc;
    j["witnesses"] = std::move(w);
  }
  return j;
}

CycleSpectrum spectrum_from_json(const Json& j) {
  CycleSpectrum s;
  s.exact = j.at("exact").get<bool>();
  s.lengths = j.at("lengths").get<std::vector<int>>();
  if (j.contains("witnesses"))
    for (const auto& [key, cyc] : j.at("witnesses").items())
      s.witnesses.emplace(std::stoi(key), cyc.get<std::vector<int>>());
  return s;
}

Json regime_report_to_json(const RegimeReport& r) {
  Json j;
  j["regime"] = r.regime;
  j["n"] = r.n;
  j["d"] = r.d;
  j["eta_sq"] = r.eta_sq;
  j["dense_threshold"] = r.dense_threshold;
  j["sparse_threshold"] = r.sparse_threshold;
  Json pred;
  pred["lo"] = r.predicted_lo;
  pred["hi"] = r.predicted_hi;
  pred["vacuous"] = r.predicted_vacuous;
  j["predicted"] = std::move(pred);
  if (r.measured) {
    j["measured"] = Json::array({r.measured->first, r.measured->second});
  } else {
    j["measured"] = nullptr;
  }
  j["spectrum_exact"] = r.spectrum_exact;
  j["spectrum_lengths"] = r.spectrum_lengths;
  j["reciprocal_sum"] = r.reciprocal_sum;
  j["reciprocal_reference"] = r.reciprocal_reference;
  return j;
}

Json preset_rows_to_json(const std::vector<PresetRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json j;
    j["name"] = row.name;
    j["value"] = row.value;
    j["vacuous"] = row.vacuous;
    arr.push_back(std::move(j));
  }
  return arr;
}

} // namespace exg
