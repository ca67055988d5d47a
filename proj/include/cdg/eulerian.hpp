#ifndef CDG_EULERIAN_HPP
#define CDG_EULERIAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "cdg/conditions.hpp"
#include "cdg/graph.hpp"

namespace cdg {

/// How clause (iii) of the diameter-three criterion is interpreted.
/// Bipartite parity (the default) requires every vertex of rho2 and rho3 to
/// have an even number of neighbours across the (rho2, rho3) cut and is the
/// reading that matches the direct Euler test.  The strict reading requires
/// the induced subgraph on rho2 and rho3 to itself be connected with all
/// degrees even; it is retained so the discrepancy between the two readings
/// can be observed empirically (the crosscheck records any disagreement).
enum class T32Mode { kBipartiteParity, kInducedSubgraphStrict };

std::string to_string(T32Mode mode);
T32Mode t32_mode_from_string(const std::string& text);

struct VerdictReason {
  std::string clause;
  std::string citation;
  bool pass = false;
  std::string witness;
};

struct EulerianVerdict {
  bool eulerian = false;
  /// One of T3.1-i, T3.1-ii, T3.1-iii, T3.2, direct-only.
  std::string route;
  T32Mode mode = T32Mode::kBipartiteParity;
  std::vector<VerdictReason> reasons;
};

/// Sufficient criteria that settle the Euler question without running the
/// direct test, tried in order:
///   (i)   complete of odd order at least three;
///   (ii)  non-complete regular of even order at least four -- which forces
///         degree n-2; the degree is verified, never assumed;
///   (iii) not a block, diameter at most two, every block of odd order --
///         such blocks must be complete, and that too is verified.
/// Returns the verdict with the clause that fired, or nullopt when no clause
/// applies.
std::optional<EulerianVerdict> classify_t31(const LabeledGraph& g);

/// Characterisation for connected diameter-three graphs: Eulerian exactly
/// when (i) the graph is a block, (ii) both halves rho1+rho2 and rho3+rho4
/// of the partition have odd order, and (iii) the cross-cut condition in the
/// selected mode holds.  Throws whatever lewis_partition throws.
EulerianVerdict classify_t32(const LabeledGraph& g,
                             T32Mode mode = T32Mode::kBipartiteParity);

struct CrosscheckRecord {
  EulerianCheck direct;
  std::string route;  // classifier that applied, or direct-only
  std::optional<EulerianVerdict> verdict;
  bool agree = true;
  std::string note;  // evidence bundle on disagreement, reason otherwise
  T32Mode mode = T32Mode::kBipartiteParity;
};

/// Runs the direct test plus whichever classifier applies and records
/// agreement; a disagreement is reported with full evidence, never dropped.
CrosscheckRecord crosscheck(const LabeledGraph& g,
                            T32Mode mode = T32Mode::kBipartiteParity);

}  // namespace cdg

#endif  // CDG_EULERIAN_HPP
