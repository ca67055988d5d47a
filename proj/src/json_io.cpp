#include "cdg/json.hpp"

namespace cdg {

namespace {

ojson edge_array(const std::vector<std::pair<Prime, Prime>>& edges) {
  ojson out = ojson::array();
  for (const auto& [a, b] : edges) out.push_back(ojson::array({a, b}));
  return out;
}

}  // namespace

ojson json_of(const GraphDocument& doc) {
  ojson out;
  out["vertices"] = doc.vertices;
  ojson edges = ojson::array();
  for (const auto& [a, b] : doc.edges) edges.push_back(ojson::array({a, b}));
  out["edges"] = std::move(edges);
  if (!doc.metadata.empty()) out["metadata"] = doc.metadata;
  return out;
}

ojson json_of(const LabeledGraph& g) {
  ojson out;
  out["vertices"] = g.labels();
  out["edges"] = edge_array(g.edges());
  return out;
}

ojson json_of(const BlockDecomposition& b) {
  ojson out;
  out["blocks"] = b.blocks;
  out["cut_vertices"] = b.cut_vertices;
  out["bridges"] = edge_array(b.bridges);
  return out;
}

ojson json_of(const EulerianCheck& c) {
  ojson out;
  out["eulerian"] = c.eulerian;
  out["reason"] = c.reason;
  return out;
}

ojson json_of(const ConditionResult& c) {
  ojson out;
  out["name"] = c.name;
  out["pass"] = c.pass;
  out["citation"] = c.citation;
  if (!c.witness.empty()) out["witness"] = c.witness;
  return out;
}

ojson json_of(const CdgReport& r) {
  ojson out;
  out["overall"] = r.overall;
  ojson conditions = ojson::array();
  for (const auto& c : r.conditions) conditions.push_back(json_of(c));
  out["conditions"] = std::move(conditions);
  return out;
}

ojson json_of(const LewisPartition& p) {
  ojson out;
  out["r"] = p.r;
  out["s"] = p.s;
  out["rho1"] = p.rho1;
  out["rho2"] = p.rho2;
  out["rho3"] = p.rho3;
  out["rho4"] = p.rho4;
  out["evidence"] = p.evidence;
  return out;
}

ojson json_of(const VerdictReason& r) {
  ojson out;
  out["clause"] = r.clause;
  out["citation"] = r.citation;
  out["pass"] = r.pass;
  if (!r.witness.empty()) out["witness"] = r.witness;
  return out;
}

ojson json_of(const EulerianVerdict& v) {
  ojson out;
  out["eulerian"] = v.eulerian;
  out["route"] = v.route;
  out["mode"] = to_string(v.mode);
  ojson reasons = ojson::array();
  for (const auto& r : v.reasons) reasons.push_back(json_of(r));
  out["reasons"] = std::move(reasons);
  return out;
}

ojson json_of(const CrosscheckRecord& r) {
  ojson out;
  out["direct"] = json_of(r.direct);
  out["route"] = r.route;
  out["verdict"] = r.verdict ? json_of(*r.verdict) : ojson(nullptr);
  out["agree"] = r.agree;
  out["note"] = r.note;
  out["mode"] = to_string(r.mode);
  return out;
}

ojson json_of(const ConstructionRecipe& r) {
  ojson out;
  out["kind"] = r.kind;
  ojson params = ojson::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  out["parameters"] = std::move(params);
  ojson children = ojson::array();
  for (const auto& c : r.children) children.push_back(json_of(c));
  out["children"] = std::move(children);
  return out;
}

ojson json_of(const CatalogMember& m) {
  ojson out;
  out["stream"] = m.stream;
  out["degree_sequence"] = degree_sequence(m.graph);
  out["graph"] = json_of(m.graph);
  out["recipe"] = json_of(m.recipe);
  return out;
}

ojson json_of(const EnumFlags& f) {
  ojson out;
  out["palfy"] = f.palfy;
  out["components"] = f.components;
  out["diameter"] = f.diameter ? ojson(*f.diameter) : ojson(nullptr);
  out["cut_vertices"] = f.cut_vertices;
  out["cut_edges"] = f.cut_edges;
  out["p4_free"] = f.p4_free;
  out["pipeline_pass"] = f.pipeline_pass;
  out["eulerian_direct"] = f.eulerian;
  out["t31_route"] = f.t31_route.empty() ? ojson(nullptr) : ojson(f.t31_route);
  out["t32_verdict"] = f.t32_verdict ? ojson(*f.t32_verdict) : ojson(nullptr);
  return out;
}

ojson json_of(const CatalogEntry& e) {
  ojson out;
  out["n"] = e.n;
  out["mask"] = e.mask;
  out["canonical"] = e.canonical;
  out["degree_sequence"] = e.degree_sequence;
  out["flags"] = json_of(e.flags);
  out["source"] = e.source;
  if (e.source == "enumerated") out["graph"] = json_of(graph_from_mask(e.n, e.mask));
  return out;
}

ojson json_of(const EnumSummary& s) {
  ojson out;
  out["n"] = s.n;
  out["masks_total"] = s.masks_total;
  out["masks_examined"] = s.masks_examined;
  out["classes_total"] = s.classes_total;
  out["classes_kept"] = s.classes_kept;
  out["filters"] = s.filters;
  ojson counts = ojson::object();
  for (const auto& [name, count] : s.flag_counts) counts[name] = count;
  out["flag_counts"] = std::move(counts);
  return out;
}

ojson json_of(const SweepReport& r) {
  ojson out;
  out["n"] = r.n;
  out["classes"] = r.classes;
  out["checks"] = r.checks;
  out["pass"] = r.violations.empty();
  out["violations"] = r.violations;
  return out;
}

}  // namespace cdg
