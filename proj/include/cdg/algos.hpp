#ifndef CDG_ALGOS_HPP
#define CDG_ALGOS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdg/graph.hpp"

namespace cdg {

/// All-pairs BFS distances; kUnreachable marks pairs in different components.
struct DistanceTable {
  static constexpr int kUnreachable = -1;
  std::vector<std::vector<int>> dist;

  int at(int i, int j) const {
    return dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
};

struct BlockDecomposition {
  /// Maximal 2-connected subgraphs, single edges, or isolated vertices;
  /// each block is a sorted label set, blocks sorted lexicographically.
  std::vector<std::vector<Prime>> blocks;
  std::vector<Prime> cut_vertices;                 // sorted
  std::vector<std::pair<Prime, Prime>> bridges;    // sorted (min,max) pairs
};

struct EulerianCheck {
  bool eulerian = false;
  std::string reason;
};

/// Components as sorted label sets, ordered by smallest label.
std::vector<std::vector<Prime>> connected_components(const LabeledGraph& g);

DistanceTable distance_table(const LabeledGraph& g);

/// Longest shortest path; nullopt means the graph is disconnected.
/// Graphs with fewer than two vertices have diameter 0.
std::optional<int> diameter(const LabeledGraph& g);

BlockDecomposition block_decomposition(const LabeledGraph& g);

/// Connected with no cut vertex (so the graph is its own unique block).
bool is_block(const LabeledGraph& g);

/// The direct Euler test: connected and every degree even.  The reason names
/// the smallest odd-degree vertex or says "disconnected".
EulerianCheck is_eulerian_direct(const LabeledGraph& g);

/// Degrees in descending order.
std::vector<int> degree_sequence(const LabeledGraph& g);

bool is_k_regular(const LabeledGraph& g, int k);
bool is_regular(const LabeledGraph& g);
bool is_complete(const LabeledGraph& g);

inline constexpr int kCanonicalDefaultMax = 12;
inline constexpr int kCanonicalHardMax = 16;

/// Canonical form: a printable byte string that is equal for two graphs
/// exactly when they are isomorphic as unlabeled graphs.  Computed by
/// iterated degree refinement followed by a backtracking search for the
/// lexicographically extremal adjacency matrix among colour-respecting
/// orderings; the result is the graph6 encoding of that canonical matrix.
/// Intended for small orders; throws TooLarge above max_order.
std::string canonical_form(const LabeledGraph& g,
                           int max_order = kCanonicalDefaultMax);

/// Same computation on raw adjacency rows indexed 0..n-1 (hot path for the
/// enumerator, which has no need to build LabeledGraph objects per mask).
std::string canonical_form_rows(int n, const std::uint32_t* rows);

bool are_isomorphic(const LabeledGraph& a, const LabeledGraph& b,
                    int max_order = kCanonicalDefaultMax);

}  // namespace cdg

#endif  // CDG_ALGOS_HPP
