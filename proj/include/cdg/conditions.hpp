#ifndef CDG_CONDITIONS_HPP
#define CDG_CONDITIONS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cdg/algos.hpp"
#include "cdg/graph.hpp"

namespace cdg {

struct PalfyResult {
  bool pass = false;
  /// Engaged exactly when the condition fails: the smallest independent
  /// triple in label order.
  std::optional<std::array<Prime, 3>> witness;
};

/// Three-prime condition: every three vertices span at least one edge
/// (equivalently, the complement is triangle-free).
PalfyResult palfy_condition(const LabeledGraph& g);

struct ConditionResult {
  std::string name;
  bool pass = false;
  std::string citation;
  std::string witness;
};

struct CdgReport {
  bool overall = false;
  std::vector<ConditionResult> conditions;

  const ConditionResult* find(const std::string& name) const;
};

/// Runs every known necessary condition for a prime graph of a finite
/// solvable group and reports all failures, not just the first:
/// three-prime condition, at most two components, two components must both
/// be complete, diameter at most three when connected, at most one cut
/// vertex, at most two cut edges, and not the four-vertex path.
CdgReport necessary_pipeline(const LabeledGraph& g);

/// True when g is isomorphic to the path on four vertices.
bool is_p4(const LabeledGraph& g);

/// The distance partition of a diameter-three graph from a base vertex r of
/// eccentricity three: rho4 holds the vertices at distance three, rho3 those
/// at distance two, rho2 the neighbours of r with a neighbour in rho3, and
/// rho1 is r together with its remaining neighbours.
struct LewisPartition {
  Prime r = 0;
  Prime s = 0;  // smallest vertex at distance three from r
  std::vector<Prime> rho1;
  std::vector<Prime> rho2;
  std::vector<Prime> rho3;
  std::vector<Prime> rho4;
  /// One line per verified structural invariant.
  std::vector<std::string> evidence;
};

/// Computes and validates the partition.  Throws NotDiameterThree when the
/// graph is not connected with diameter exactly three, BadBaseVertex when an
/// explicit base vertex does not have eccentricity three, and
/// StructureViolation (naming the violated clause) when the partition does
/// not satisfy the required structure.  Default base: the smallest label of
/// eccentricity three.
LewisPartition lewis_partition(const LabeledGraph& g,
                               std::optional<Prime> base = std::nullopt);

/// One partition per valid base vertex / distance-three target pair, in label
/// order.  Bases whose partition fails validation are skipped; a note per
/// rejected base is appended to `rejected` when provided.
std::vector<LewisPartition> all_lewis_partitions(
    const LabeledGraph& g, std::vector<std::string>* rejected = nullptr);

/// Blocks have no cut vertex: the graph is a block exactly when both middle
/// parts of the partition contain at least two primes.
bool block_by_partition(const LewisPartition& p);

/// When rho2 is a single prime that prime is the unique cut vertex; when
/// rho2 has two or more primes the graph has no cut vertex.  The prediction
/// is checked against the block decomposition and a mismatch (a graph
/// outside the hypotheses) throws InconsistentWitness.
std::optional<Prime> cut_vertex_by_partition(const LewisPartition& p,
                                             const LabeledGraph& g);

}  // namespace cdg

#endif  // CDG_CONDITIONS_HPP
