#include "cdg/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace cdg {

namespace {

using ojson = nlohmann::ordered_json;

std::int64_t require_integer(const ojson& v, const char* where) {
  if (v.is_number_unsigned()) {
    auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      throw Error(ErrorCode::MalformedInput,
                  std::string(where) + " value is out of range");
    return static_cast<std::int64_t>(u);
  }
  if (!v.is_number_integer())
    throw Error(ErrorCode::MalformedInput,
                std::string(where) + " entries must be integers");
  return v.get<std::int64_t>();
}

Prime check_label(std::int64_t value, const ParseOptions& options) {
  if (value < 1)
    throw Error(ErrorCode::MalformedInput,
                "vertex label " + std::to_string(value) + " is not a positive integer");
  if (value > std::numeric_limits<Prime>::max())
    throw Error(ErrorCode::MalformedInput,
                "vertex label " + std::to_string(value) + " is too large");
  auto p = static_cast<Prime>(value);
  if (options.require_primes && !is_prime(p))
    throw Error(ErrorCode::NonPrimeLabel,
                "vertex label " + std::to_string(value) + " is not prime");
  return p;
}

}  // namespace

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  if (value < 4) return true;
  if (value % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= value; d += 2)
    if (value % d == 0) return false;
  return true;
}

std::vector<Prime> first_primes(int n) {
  std::vector<Prime> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Prime p = 2; static_cast<int>(out.size()) < n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

GraphDocument GraphDocument::from_json(std::string_view text) {
  ojson j = ojson::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded())
    throw Error(ErrorCode::MalformedInput, "input is not valid JSON");
  if (!j.is_object())
    throw Error(ErrorCode::MalformedInput, "top-level JSON value must be an object");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw Error(ErrorCode::MalformedInput, "missing \"vertices\" array");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw Error(ErrorCode::MalformedInput, "missing \"edges\" array");

  GraphDocument doc;
  for (const auto& v : j["vertices"])
    doc.vertices.push_back(require_integer(v, "vertex"));
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw Error(ErrorCode::MalformedInput, "each edge must be a two-element array");
    doc.edges.emplace_back(require_integer(e[0], "edge"), require_integer(e[1], "edge"));
  }
  if (j.contains("metadata")) {
    const auto& meta = j["metadata"];
    if (!meta.is_object())
      throw Error(ErrorCode::MalformedInput, "\"metadata\" must be an object");
    for (auto it = meta.begin(); it != meta.end(); ++it) {
      if (!it.value().is_string())
        throw Error(ErrorCode::MalformedInput, "metadata values must be strings");
      doc.metadata[it.key()] = it.value().get<std::string>();
    }
  }
  return doc;
}

std::string GraphDocument::to_json() const {
  ojson j;
  j["vertices"] = ojson::array();
  for (auto v : vertices) j["vertices"].push_back(v);
  j["edges"] = ojson::array();
  for (const auto& [a, b] : edges) j["edges"].push_back(ojson::array({a, b}));
  if (!metadata.empty()) {
    ojson meta = ojson::object();
    for (const auto& [k, v] : metadata) meta[k] = v;
    j["metadata"] = std::move(meta);
  }
  return j.dump();
}

LabeledGraph LabeledGraph::build(std::vector<Prime> vertices,
                                 const std::vector<std::pair<Prime, Prime>>& edges,
                                 const ParseOptions& options,
                                 std::vector<std::string>* warnings) {
  if (vertices.size() > kMaxVertices)
    throw Error(ErrorCode::TooLarge,
                "graph has " + std::to_string(vertices.size()) +
                    " vertices; at most " + std::to_string(kMaxVertices) +
                    " are supported");
  for (Prime p : vertices) {
    if (p < 1)
      throw Error(ErrorCode::MalformedInput, "vertex labels must be positive");
    if (options.require_primes && !is_prime(p))
      throw Error(ErrorCode::NonPrimeLabel,
                  "vertex label " + std::to_string(p) + " is not prime");
  }
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i] == vertices[i - 1])
      throw Error(ErrorCode::MalformedInput,
                  "duplicate vertex label " + std::to_string(vertices[i]));

  LabeledGraph g;
  g.labels_ = std::move(vertices);
  g.rows_.assign(g.labels_.size(), 0);

  std::set<std::pair<Prime, Prime>> seen;
  for (const auto& [a, b] : edges) {
    if (a == b)
      throw Error(ErrorCode::SelfLoop,
                  "edge [" + std::to_string(a) + ", " + std::to_string(b) +
                      "] is a self-loop");
    int i = g.index_of(a);
    int j = g.index_of(b);
    if (i < 0 || j < 0) {
      Prime missing = i < 0 ? a : b;
      throw Error(ErrorCode::UnknownEndpoint,
                  "edge endpoint " + std::to_string(missing) +
                      " is not in the vertex list");
    }
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      if (warnings)
        warnings->push_back("duplicate edge [" + std::to_string(key.first) + ", " +
                            std::to_string(key.second) + "] collapsed");
      continue;
    }
    g.rows_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    g.rows_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
  }
  return g;
}

LabeledGraph LabeledGraph::from_document(const GraphDocument& doc,
                                         const ParseOptions& options,
                                         std::vector<std::string>* warnings) {
  std::vector<Prime> vertices;
  vertices.reserve(doc.vertices.size());
  for (auto raw : doc.vertices) vertices.push_back(check_label(raw, options));
  std::vector<std::pair<Prime, Prime>> edges;
  edges.reserve(doc.edges.size());
  for (const auto& [a, b] : doc.edges)
    edges.emplace_back(check_label(a, options), check_label(b, options));
  return build(std::move(vertices), edges, options, warnings);
}

LabeledGraph LabeledGraph::complete(std::vector<Prime> vertices) {
  std::vector<std::pair<Prime, Prime>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      edges.emplace_back(vertices[i], vertices[j]);
  return build(std::move(vertices), edges);
}

LabeledGraph LabeledGraph::from_rows(std::vector<Prime> sorted_vertices,
                                     std::vector<std::uint64_t> rows) {
  LabeledGraph g;
  g.labels_ = std::move(sorted_vertices);
  g.rows_ = std::move(rows);
  return g;
}

std::size_t LabeledGraph::size() const {
  std::size_t twice = 0;
  for (auto r : rows_) twice += static_cast<std::size_t>(std::popcount(r));
  return twice / 2;
}

int LabeledGraph::index_of(Prime p) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), p);
  if (it == labels_.end() || *it != p) return -1;
  return static_cast<int>(it - labels_.begin());
}

bool LabeledGraph::adjacent_labels(Prime p, Prime q) const {
  int i = index_of(p);
  int j = index_of(q);
  if (i < 0)
    throw Error(ErrorCode::UnknownVertex,
                "vertex " + std::to_string(p) + " is not in the graph");
  if (j < 0)
    throw Error(ErrorCode::UnknownVertex,
                "vertex " + std::to_string(q) + " is not in the graph");
  return adjacent(i, j);
}

int LabeledGraph::degree(int i) const {
  return std::popcount(rows_[static_cast<std::size_t>(i)]);
}

std::vector<std::pair<Prime, Prime>> LabeledGraph::edges() const {
  std::vector<std::pair<Prime, Prime>> out;
  const int n = order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (adjacent(i, j)) out.emplace_back(labels_[static_cast<std::size_t>(i)],
                                           labels_[static_cast<std::size_t>(j)]);
  return out;
}

LabeledGraph LabeledGraph::complement() const {
  const int n = order();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  const std::uint64_t all =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (int i = 0; i < n; ++i)
    rows[static_cast<std::size_t>(i)] =
        (~rows_[static_cast<std::size_t>(i)] & all) & ~(std::uint64_t{1} << i);
  return from_rows(labels_, std::move(rows));
}

LabeledGraph LabeledGraph::induced(const std::vector<Prime>& keep) const {
  std::vector<Prime> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> old_index;
  old_index.reserve(sorted.size());
  for (Prime p : sorted) {
    int i = index_of(p);
    if (i < 0)
      throw Error(ErrorCode::UnknownVertex,
                  "vertex " + std::to_string(p) + " is not in the graph");
    old_index.push_back(i);
  }
  const int m = static_cast<int>(sorted.size());
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(m), 0);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (adjacent(old_index[static_cast<std::size_t>(a)],
                   old_index[static_cast<std::size_t>(b)])) {
        rows[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
        rows[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
      }
  return from_rows(std::move(sorted), std::move(rows));
}

LabeledGraph parse_graph(std::string_view text, const ParseOptions& options,
                         std::vector<std::string>* warnings) {
  return LabeledGraph::from_document(GraphDocument::from_json(text), options, warnings);
}

std::string serialize_graph(const LabeledGraph& g) {
  GraphDocument doc;
  for (Prime p : g.labels()) doc.vertices.push_back(p);
  for (const auto& [a, b] : g.edges()) doc.edges.emplace_back(a, b);
  return doc.to_json();
}

std::string to_dot(const LabeledGraph& g) {
  std::ostringstream out;
  out << "graph {\n";
  for (Prime p : g.labels()) out << "  " << p << ";\n";
  for (const auto& [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace cdg
