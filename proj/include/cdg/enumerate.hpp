#ifndef CDG_ENUMERATE_HPP
#define CDG_ENUMERATE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdg/eulerian.hpp"
#include "cdg/graph.hpp"

namespace cdg {

/// Isomorphism-invariant facts recorded per class.
struct EnumFlags {
  bool palfy = false;
  int components = 0;
  std::optional<int> diameter;  // nullopt when disconnected
  int cut_vertices = 0;
  int cut_edges = 0;
  bool p4_free = false;
  bool pipeline_pass = false;
  bool eulerian = false;
  /// Sufficient clause that fired (T3.1-i / T3.1-ii / T3.1-iii), or empty.
  std::string t31_route;
  /// Diameter-three verdict; engaged only when the distance partition from
  /// the default base validates.
  std::optional<bool> t32_verdict;
};

struct CatalogEntry {
  int n = 0;
  /// Smallest edge mask in the class: bit k covers the k-th vertex pair in
  /// lexicographic order (0,1), (0,2), ..., (n-2,n-1).
  std::uint64_t mask = 0;
  std::string canonical;
  std::vector<int> degree_sequence;
  EnumFlags flags;
  std::string source = "enumerated";  // enumerated | constructed
};

/// Canonical form -> smallest edge mask with that form.
using ClassMap = std::map<std::string, std::uint64_t>;

/// Known counts of isomorphism classes of graphs on 1..7 vertices.
inline constexpr std::uint64_t kKnownClassCounts[] = {1, 2, 4, 11, 34, 156, 1044};

/// The graph encoded by an edge mask, on the first n primes.
LabeledGraph graph_from_mask(int n, std::uint64_t mask);

EnumFlags compute_flags(const LabeledGraph& g,
                        T32Mode mode = T32Mode::kBipartiteParity);

CatalogEntry classify_mask(int n, std::uint64_t mask,
                           T32Mode mode = T32Mode::kBipartiteParity);

/// Names accepted by the --filter option, in documentation order.
std::vector<std::string> known_filters();

/// Whether an entry satisfies the named filter; throws UnknownFilter for
/// names outside known_filters().
bool filter_matches(const std::string& name, const CatalogEntry& entry);

struct Checkpoint {
  int n = 0;
  std::uint64_t next_mask = 0;  // all masks below this are merged
  ClassMap classes;
};

void save_checkpoint(const std::string& path, const Checkpoint& cp);

/// nullopt when the file does not exist; MalformedInput when unreadable.
std::optional<Checkpoint> load_checkpoint(const std::string& path);

/// Folds the masks in [lo, hi) into the class map.  Work is split into
/// fixed-size chunks claimed by `workers` threads; finished chunks are merged
/// strictly in mask order, so the result -- and every checkpoint written
/// along the way -- is independent of thread scheduling.  With `progress`
/// the merge reports completed prefixes on standard error.
ClassMap enumerate_range(int n, std::uint64_t lo, std::uint64_t hi,
                         const ClassMap& seed = {}, int workers = 1,
                         const std::string& checkpoint_path = "",
                         bool progress = false);

struct EnumOptions {
  std::vector<std::string> filters;  // conjunction
  int workers = 1;
  std::string checkpoint_path;  // resume from here when the file exists
  T32Mode mode = T32Mode::kBipartiteParity;
  bool progress = false;
};

struct EnumSummary {
  int n = 0;
  std::uint64_t masks_total = 0;
  std::uint64_t masks_examined = 0;  // smaller when resumed from a checkpoint
  std::uint64_t classes_total = 0;
  std::uint64_t classes_kept = 0;
  std::vector<std::string> filters;
  /// Per-predicate class counts over the whole (unfiltered) enumeration, in
  /// known_filters() order.
  std::vector<std::pair<std::string, std::uint64_t>> flag_counts;
  std::vector<CatalogEntry> entries;  // kept classes, sorted by canonical form
};

/// Enumerates all graphs on n labeled vertices (n between 1 and 8), groups
/// them into isomorphism classes, classifies one representative per class,
/// and keeps the classes matching every filter.
EnumSummary enumerate_graphs(int n, const EnumOptions& options = {});

struct SweepReport {
  int n = 0;
  std::uint64_t classes = 0;
  std::uint64_t checks = 0;
  std::vector<std::string> violations;
};

/// Exhaustively verifies, over every isomorphism class on n <= 7 vertices:
/// the crosscheck never disagrees (soundness of the sufficient clauses and
/// equivalence of the diameter-three characterisation with the direct test),
/// graphs passing the three-prime condition have at most two components and
/// two components are complete, no such graph of diameter three with a cut
/// vertex is Eulerian, and pipeline passers respect the cut vertex, cut edge
/// and block bounds.
SweepReport sweep_validate(int n, T32Mode mode = T32Mode::kBipartiteParity,
                           int workers = 1);

}  // namespace cdg

#endif  // CDG_ENUMERATE_HPP
