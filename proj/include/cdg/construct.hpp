#ifndef CDG_CONSTRUCT_HPP
#define CDG_CONSTRUCT_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cdg/graph.hpp"

namespace cdg {

/// Deterministic source of fresh primes for the constructors: always issues
/// the smallest prime (or smallest odd prime) not yet used or reserved.
/// Issuance is stateful; share a pool across threads only with external
/// synchronisation.
class PrimePool {
public:
  explicit PrimePool(Prime limit = 104729);

  void reserve(Prime p) { used_.insert(p); }
  void reserve_graph(const LabeledGraph& g);

  Prime take();      // smallest unused prime
  Prime take_odd();  // smallest unused odd prime

private:
  Prime scan(Prime start, bool odd_only);

  std::set<Prime> used_;
  Prime limit_;
};

/// Provenance record for constructed graphs.  Parameters keep insertion
/// order so serialized recipes are stable.
struct ConstructionRecipe {
  std::string kind;  // base-figure | two-component | direct-product |
                     // operation-d | regular-family | catalog-member
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<ConstructionRecipe> children;
};

ConstructionRecipe input_recipe(const std::string& source);

struct Constructed {
  LabeledGraph graph;
  ConstructionRecipe recipe;
};

/// Degree-graph direct product: disjoint union of the vertex sets plus every
/// cross edge (the graph join).  Throws LabelCollision when the operand
/// vertex sets intersect.
LabeledGraph direct_product(const LabeledGraph& a, const LabeledGraph& b);

/// The two-component degree graph: an isolated vertex p (p odd) next to a
/// complete graph on qs.  Throws EvenP when p = 2 and LabelCollision when p
/// occurs among the qs.
LabeledGraph two_component_graph(Prime p, const std::vector<Prime>& qs);

/// Operation D: join g with two fresh non-adjacent vertices, an odd prime p
/// drawn first and then any prime q.  Adds two to every old degree and gives
/// both new vertices degree |V(g)|; preserves Eulerian graphs of even order.
Constructed operation_d(const LabeledGraph& g, PrimePool& pool,
                        ConstructionRecipe base = {});

/// The (n-2)-regular family: the 4-cycle for n = 4, then Operation D applied
/// repeatedly.  The result is the complement of a perfect matching on n
/// vertices.  Throws BadN unless n is even and at least four.
Constructed regular_family(int n, PrimePool& pool);

/// Guaranteed number of pairwise non-isomorphic members of the catalogue:
/// floor((n-4)/2) + floor(n/6) - 1 for even n at least six (BadN otherwise).
int lower_bound(int n);

struct CatalogMember {
  LabeledGraph graph;
  ConstructionRecipe recipe;
  std::string stream;  // two-component-fresh | operation-d-lift | product-chain
};

/// Constructs, for even n >= 6, a family of pairwise non-isomorphic
/// non-regular Eulerian blocks of diameter two on n vertices whose size
/// meets lower_bound(n).  Every member is verified (non-regular, block,
/// diameter two, Eulerian, distinct from the others); a violation throws
/// InternalCheckFailed.  Each member is labelled with the construction
/// stream that produced it so overlaps between streams stay detectable.
std::vector<CatalogMember> eulerian_catalog(int n, PrimePool& pool);

/// Rebuilds a graph from a recipe tree (constructive kinds only).
LabeledGraph replay_recipe(const ConstructionRecipe& recipe);

}  // namespace cdg

#endif  // CDG_CONSTRUCT_HPP
