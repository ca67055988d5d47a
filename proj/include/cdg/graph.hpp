#ifndef CDG_GRAPH_HPP
#define CDG_GRAPH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdg/error.hpp"

namespace cdg {

/// Vertex labels are primes (the primes dividing character degrees).  A
/// validation bypass admits arbitrary distinct positive integers so that
/// hypothetical graphs can be fed through the same machinery.
using Prime = std::uint32_t;

bool is_prime(std::uint64_t value);

/// The first n primes 2, 3, 5, ... (default labels for enumerated graphs).
std::vector<Prime> first_primes(int n);

/// Hard cap that keeps one adjacency row inside a single 64-bit word.
constexpr int kMaxVertices = 64;

struct ParseOptions {
  bool require_primes = true;
};

/// Faithful parsed form of the JSON interchange format:
///   {"vertices": [2,3,5], "edges": [[2,3],[3,5]], "metadata": {...}}
/// Vertices/edges are kept exactly as given (no sorting, no validation) so a
/// document round-trips losslessly; metadata is an optional string map.
struct GraphDocument {
  std::vector<std::int64_t> vertices;
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::map<std::string, std::string> metadata;

  static GraphDocument from_json(std::string_view text);
  std::string to_json() const;

  bool operator==(const GraphDocument&) const = default;
};

/// Simple undirected graph on sorted prime labels.  Adjacency is one bitmask
/// row per vertex index, so adjacency queries are O(1) and everything
/// downstream (components, blocks, canonical forms) works on machine words.
/// Immutable after construction.
class LabeledGraph {
public:
  LabeledGraph() = default;

  /// Validates labels and edges and builds the bitmatrix.  Duplicate edges
  /// are tolerated (collapsed) but reported through `warnings`; everything
  /// else on the error list throws.
  static LabeledGraph build(std::vector<Prime> vertices,
                            const std::vector<std::pair<Prime, Prime>>& edges,
                            const ParseOptions& options = {},
                            std::vector<std::string>* warnings = nullptr);

  static LabeledGraph from_document(const GraphDocument& doc,
                                    const ParseOptions& options = {},
                                    std::vector<std::string>* warnings = nullptr);

  /// Complete graph on the given labels.
  static LabeledGraph complete(std::vector<Prime> vertices);

  /// Internal constructor from already-sorted labels and symmetric rows.
  static LabeledGraph from_rows(std::vector<Prime> sorted_vertices,
                                std::vector<std::uint64_t> rows);

  int order() const { return static_cast<int>(labels_.size()); }
  std::size_t size() const;  // number of edges

  const std::vector<Prime>& labels() const { return labels_; }
  Prime label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  int index_of(Prime p) const;  // -1 when absent
  bool contains(Prime p) const { return index_of(p) >= 0; }

  bool adjacent(int i, int j) const {
    return (rows_[static_cast<std::size_t>(i)] >> j) & 1u;
  }
  bool adjacent_labels(Prime p, Prime q) const;
  std::uint64_t row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  int degree(int i) const;

  /// Edges as (smaller, larger) label pairs in lexicographic order.
  std::vector<std::pair<Prime, Prime>> edges() const;

  LabeledGraph complement() const;
  LabeledGraph induced(const std::vector<Prime>& keep) const;

  bool operator==(const LabeledGraph&) const = default;

private:
  std::vector<Prime> labels_;        // ascending
  std::vector<std::uint64_t> rows_;  // adjacency bitmask per vertex index
};

LabeledGraph parse_graph(std::string_view text, const ParseOptions& options = {},
                         std::vector<std::string>* warnings = nullptr);

/// Canonical serialization: sorted vertices, sorted (min,max) edge pairs.
/// parse_graph(serialize_graph(g)) reproduces g exactly.
std::string serialize_graph(const LabeledGraph& g);

/// Graphviz export: one vertex statement and one `p -- q;` line per edge,
/// all sorted, so output is stable across runs.
std::string to_dot(const LabeledGraph& g);

}  // namespace cdg

#endif  // CDG_GRAPH_HPP
