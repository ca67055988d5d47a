#include "cdg/conditions.hpp"

#include <algorithm>
#include <sstream>

namespace cdg {

namespace {

constexpr const char* kCitePalfy = "Palfy: three primes always span an edge";
constexpr const char* kCiteComponents = "Manz: at most two connected components";
constexpr const char* kCiteComplete =
    "three-prime condition forces two components to be complete";
constexpr const char* kCiteDiameter = "Manz-Willems-Wolf: diameter at most three";
constexpr const char* kCiteCutVertex = "Lewis: at most one cut vertex";
constexpr const char* kCiteCutEdge = "at most two cut edges";
constexpr const char* kCiteP4 = "Zhang: the four-vertex path does not occur";

std::string label_set(const std::vector<Prime>& labels) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out << ", ";
    out << labels[i];
  }
  out << '}';
  return out.str();
}

std::string pair_list(const std::vector<std::pair<Prime, Prime>>& pairs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out << ", ";
    out << '[' << pairs[i].first << ", " << pairs[i].second << ']';
  }
  return out.str();
}

}  // namespace

PalfyResult palfy_condition(const LabeledGraph& g) {
  const int n = g.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      for (int k = j + 1; k < n; ++k)
        if (!g.adjacent(i, k) && !g.adjacent(j, k))
          return {false, std::array<Prime, 3>{g.label(i), g.label(j), g.label(k)}};
    }
  return {true, std::nullopt};
}

const ConditionResult* CdgReport::find(const std::string& name) const {
  for (const auto& c : conditions)
    if (c.name == name) return &c;
  return nullptr;
}

CdgReport necessary_pipeline(const LabeledGraph& g) {
  CdgReport report;
  auto add = [&report](std::string name, bool pass, const char* citation,
                       std::string witness) {
    report.conditions.push_back(
        {std::move(name), pass, citation, std::move(witness)});
  };

  auto palfy = palfy_condition(g);
  add("palfy", palfy.pass, kCitePalfy,
      palfy.pass ? "no independent triple"
                 : "independent triple " + label_set({(*palfy.witness)[0],
                                                      (*palfy.witness)[1],
                                                      (*palfy.witness)[2]}));

  auto comps = connected_components(g);
  add("component_count", comps.size() <= 2, kCiteComponents,
      std::to_string(comps.size()) + " component" + (comps.size() == 1 ? "" : "s"));

  if (comps.size() == 2) {
    bool pass = true;
    std::string witness = "both components complete";
    for (const auto& comp : comps) {
      auto sub = g.induced(comp);
      if (!is_complete(sub)) {
        pass = false;
        // name one missing edge inside the offending component
        bool done = false;
        for (int i = 0; i < sub.order() && !done; ++i)
          for (int j = i + 1; j < sub.order() && !done; ++j)
            if (!sub.adjacent(i, j)) {
              witness = "component " + label_set(comp) + " is missing edge [" +
                        std::to_string(sub.label(i)) + ", " +
                        std::to_string(sub.label(j)) + "]";
              done = true;
            }
        break;
      }
    }
    add("two_components_complete", pass, kCiteComplete, witness);
  } else {
    add("two_components_complete", true, kCiteComplete,
        "not applicable (" + std::to_string(comps.size()) + " component" +
            (comps.size() == 1 ? "" : "s") + ")");
  }

  if (comps.size() <= 1) {
    auto diam = diameter(g);
    add("diameter_bound", diam.has_value() && *diam <= 3, kCiteDiameter,
        diam ? "diameter " + std::to_string(*diam) : "disconnected");
  } else {
    add("diameter_bound", true, kCiteDiameter, "not applicable (disconnected)");
  }

  auto blocks = block_decomposition(g);
  add("cut_vertex_bound", blocks.cut_vertices.size() <= 1, kCiteCutVertex,
      blocks.cut_vertices.empty()
          ? "no cut vertex"
          : "cut vertices " + label_set(blocks.cut_vertices));
  add("cut_edge_bound", blocks.bridges.size() <= 2, kCiteCutEdge,
      blocks.bridges.empty() ? "no cut edge"
                             : "cut edges " + pair_list(blocks.bridges));

  bool p4 = is_p4(g);
  add("not_p4", !p4, kCiteP4,
      p4 ? "isomorphic to the four-vertex path" : "not the four-vertex path");

  report.overall = std::all_of(report.conditions.begin(), report.conditions.end(),
                               [](const ConditionResult& c) { return c.pass; });
  return report;
}

bool is_p4(const LabeledGraph& g) {
  if (g.order() != 4) return false;
  static const std::string p4_canon = canonical_form(
      LabeledGraph::build({2, 3, 5, 7}, {{2, 3}, {3, 5}, {5, 7}}));
  return canonical_form(g) == p4_canon;
}

namespace {

LewisPartition partition_from_base(const LabeledGraph& g, const DistanceTable& table,
                                   int r_index, int s_index) {
  const int n = g.order();
  LewisPartition part;
  part.r = g.label(r_index);
  part.s = g.label(s_index);

  std::vector<int> rho3_idx;
  std::vector<int> dist1_idx;
  for (int v = 0; v < n; ++v) {
    switch (table.at(r_index, v)) {
      case 1: dist1_idx.push_back(v); break;
      case 2: rho3_idx.push_back(v); part.rho3.push_back(g.label(v)); break;
      case 3: part.rho4.push_back(g.label(v)); break;
      default: break;
    }
  }
  part.rho1.push_back(part.r);
  for (int v : dist1_idx) {
    bool sees_rho3 = false;
    for (int w : rho3_idx)
      if (g.adjacent(v, w)) {
        sees_rho3 = true;
        break;
      }
    (sees_rho3 ? part.rho2 : part.rho1).push_back(g.label(v));
  }
  std::sort(part.rho1.begin(), part.rho1.end());
  std::sort(part.rho2.begin(), part.rho2.end());

  // Validate the structure the partition of a degree graph must have.
  auto require_complete = [&g, &part](const std::vector<Prime>& a,
                                      const std::vector<Prime>& b,
                                      const std::string& clause) {
    std::vector<Prime> merged = a;
    merged.insert(merged.end(), b.begin(), b.end());
    for (std::size_t i = 0; i < merged.size(); ++i)
      for (std::size_t j = i + 1; j < merged.size(); ++j)
        if (!g.adjacent_labels(merged[i], merged[j]))
          throw Error(ErrorCode::StructureViolation,
                      clause + " is violated: missing edge [" +
                          std::to_string(std::min(merged[i], merged[j])) + ", " +
                          std::to_string(std::max(merged[i], merged[j])) + "]");
    part.evidence.push_back(clause + " holds");
  };
  auto require_no_edges = [&g, &part](const std::vector<Prime>& a,
                                      const std::vector<Prime>& b,
                                      const std::string& clause) {
    for (Prime x : a)
      for (Prime y : b)
        if (g.adjacent_labels(x, y))
          throw Error(ErrorCode::StructureViolation,
                      clause + " is violated: unexpected edge [" +
                          std::to_string(std::min(x, y)) + ", " +
                          std::to_string(std::max(x, y)) + "]");
    part.evidence.push_back(clause + " holds");
  };

  require_complete(part.rho1, part.rho2, "rho1 and rho2 span a complete subgraph");
  require_complete(part.rho3, part.rho4, "rho3 and rho4 span a complete subgraph");
  {
    std::vector<Prime> far = part.rho3;
    far.insert(far.end(), part.rho4.begin(), part.rho4.end());
    require_no_edges(part.rho1, far, "no edges between rho1 and rho3 or rho4");
  }
  {
    std::vector<Prime> near = part.rho1;
    near.insert(near.end(), part.rho2.begin(), part.rho2.end());
    require_no_edges(part.rho4, near, "no edges between rho4 and rho1 or rho2");
  }
  for (Prime x : part.rho3) {
    bool seen = false;
    for (Prime y : part.rho2)
      if (g.adjacent_labels(x, y)) {
        seen = true;
        break;
      }
    if (!seen)
      throw Error(ErrorCode::StructureViolation,
                  "every rho3 vertex has a neighbour in rho2 is violated: vertex " +
                      std::to_string(x));
  }
  part.evidence.push_back("every rho3 vertex has a neighbour in rho2");
  part.evidence.push_back("every rho2 vertex has a neighbour in rho3");
  return part;
}

std::vector<int> eccentricity_three_bases(const LabeledGraph& g,
                                          const DistanceTable& table) {
  const int n = g.order();
  std::vector<int> bases;
  for (int v = 0; v < n; ++v) {
    int ecc = 0;
    for (int u = 0; u < n; ++u) ecc = std::max(ecc, table.at(v, u));
    if (ecc == 3) bases.push_back(v);
  }
  return bases;
}

}  // namespace

LewisPartition lewis_partition(const LabeledGraph& g, std::optional<Prime> base) {
  auto diam = diameter(g);
  if (!diam || *diam != 3)
    throw Error(ErrorCode::NotDiameterThree,
                diam ? "graph has diameter " + std::to_string(*diam)
                     : "graph is disconnected");
  auto table = distance_table(g);
  int r_index = -1;
  if (base) {
    r_index = g.index_of(*base);
    if (r_index < 0)
      throw Error(ErrorCode::BadBaseVertex,
                  "vertex " + std::to_string(*base) + " is not in the graph");
    int ecc = 0;
    for (int u = 0; u < g.order(); ++u) ecc = std::max(ecc, table.at(r_index, u));
    if (ecc != 3)
      throw Error(ErrorCode::BadBaseVertex,
                  "vertex " + std::to_string(*base) + " has eccentricity " +
                      std::to_string(ecc) + ", need 3");
  } else {
    r_index = eccentricity_three_bases(g, table).front();
  }
  int s_index = -1;
  for (int u = 0; u < g.order(); ++u)
    if (table.at(r_index, u) == 3) {
      s_index = u;
      break;
    }
  return partition_from_base(g, table, r_index, s_index);
}

std::vector<LewisPartition> all_lewis_partitions(const LabeledGraph& g,
                                                 std::vector<std::string>* rejected) {
  auto diam = diameter(g);
  if (!diam || *diam != 3)
    throw Error(ErrorCode::NotDiameterThree,
                diam ? "graph has diameter " + std::to_string(*diam)
                     : "graph is disconnected");
  auto table = distance_table(g);
  std::vector<LewisPartition> out;
  for (int r_index : eccentricity_three_bases(g, table)) {
    for (int s_index = 0; s_index < g.order(); ++s_index) {
      if (table.at(r_index, s_index) != 3) continue;
      try {
        out.push_back(partition_from_base(g, table, r_index, s_index));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::StructureViolation) throw;
        if (rejected)
          rejected->push_back("base " + std::to_string(g.label(r_index)) + ": " +
                              e.what());
        break;  // other targets for this base fail the same way
      }
    }
  }
  return out;
}

bool block_by_partition(const LewisPartition& p) {
  return p.rho2.size() >= 2 && p.rho3.size() >= 2;
}

std::optional<Prime> cut_vertex_by_partition(const LewisPartition& p,
                                             const LabeledGraph& g) {
  auto blocks = block_decomposition(g);
  if (p.rho2.size() == 1) {
    Prime predicted = p.rho2.front();
    if (blocks.cut_vertices.size() != 1 || blocks.cut_vertices.front() != predicted)
      throw Error(ErrorCode::InconsistentWitness,
                  "partition predicts unique cut vertex " +
                      std::to_string(predicted) + " but decomposition finds " +
                      (blocks.cut_vertices.empty() ? std::string("none")
                                                   : label_set(blocks.cut_vertices)));
    return predicted;
  }
  if (!blocks.cut_vertices.empty())
    throw Error(ErrorCode::InconsistentWitness,
                "partition predicts no cut vertex (|rho2| = " +
                    std::to_string(p.rho2.size()) + ") but decomposition finds " +
                    label_set(blocks.cut_vertices));
  return std::nullopt;
}

}  // namespace cdg
