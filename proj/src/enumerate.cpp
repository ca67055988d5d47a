#include "cdg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "cdg/algos.hpp"
#include "cdg/conditions.hpp"

namespace cdg {

namespace {

constexpr std::uint64_t kChunkMasks = 1u << 16;

int slot_count(int n) { return n * (n - 1) / 2; }

void mask_to_rows(int n, std::uint64_t mask, std::uint32_t* rows) {
  std::fill(rows, rows + n, 0u);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if ((mask >> k) & 1u) {
        rows[i] |= 1u << j;
        rows[j] |= 1u << i;
      }
}

void check_enum_n(int n) {
  if (n < 1 || n > 8)
    throw Error(ErrorCode::BadN,
                "enumeration covers 1 <= n <= 8, got " + std::to_string(n));
}

}  // namespace

LabeledGraph graph_from_mask(int n, std::uint64_t mask) {
  check_enum_n(n);
  int slots = slot_count(n);
  if (slots < 64 && (mask >> slots) != 0)
    throw Error(ErrorCode::MalformedInput,
                "mask " + std::to_string(mask) + " has bits beyond the " +
                    std::to_string(slots) + " vertex pairs of n=" + std::to_string(n));
  auto primes = first_primes(n);
  std::vector<std::pair<Prime, Prime>> edges;
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if ((mask >> k) & 1u) edges.emplace_back(primes[i], primes[j]);
  return LabeledGraph::build(primes, edges);
}

EnumFlags compute_flags(const LabeledGraph& g, T32Mode mode) {
  EnumFlags f;
  auto report = necessary_pipeline(g);
  f.palfy = report.find("palfy")->pass;
  f.p4_free = report.find("not_p4")->pass;
  f.pipeline_pass = report.overall;
  f.components = static_cast<int>(connected_components(g).size());
  f.diameter = diameter(g);
  auto blocks = block_decomposition(g);
  f.cut_vertices = static_cast<int>(blocks.cut_vertices.size());
  f.cut_edges = static_cast<int>(blocks.bridges.size());
  f.eulerian = is_eulerian_direct(g).eulerian;
  if (f.diameter && *f.diameter == 3) {
    try {
      f.t32_verdict = classify_t32(g, mode).eulerian;
    } catch (const Error&) {
      // No valid distance partition from the default base; nothing to record.
    }
  } else if (auto verdict = classify_t31(g)) {
    f.t31_route = verdict->route;
  }
  return f;
}

CatalogEntry classify_mask(int n, std::uint64_t mask, T32Mode mode) {
  CatalogEntry entry;
  entry.n = n;
  entry.mask = mask;
  auto g = graph_from_mask(n, mask);
  entry.canonical = canonical_form(g);
  entry.degree_sequence = degree_sequence(g);
  entry.flags = compute_flags(g, mode);
  return entry;
}

std::vector<std::string> known_filters() {
  return {"palfy",   "pipeline",   "eulerian",  "connected", "block",
          "regular", "nonregular", "diameter2", "diameter3"};
}

bool filter_matches(const std::string& name, const CatalogEntry& entry) {
  const EnumFlags& f = entry.flags;
  if (name == "palfy") return f.palfy;
  if (name == "pipeline") return f.pipeline_pass;
  if (name == "eulerian") return f.eulerian;
  if (name == "connected") return f.components == 1;
  if (name == "block") return f.components == 1 && f.cut_vertices == 0;
  if (name == "regular" || name == "nonregular") {
    const auto& d = entry.degree_sequence;
    bool regular = d.empty() || d.front() == d.back();
    return name == "regular" ? regular : !regular;
  }
  if (name == "diameter2") return f.diameter && *f.diameter == 2;
  if (name == "diameter3") return f.diameter && *f.diameter == 3;
  std::string names;
  for (const auto& known : known_filters()) {
    if (!names.empty()) names += ", ";
    names += known;
  }
  throw Error(ErrorCode::UnknownFilter,
              "no filter named \"" + name + "\" (known: " + names + ")");
}

void save_checkpoint(const std::string& path, const Checkpoint& cp) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out)
      throw Error(ErrorCode::MalformedInput, "cannot write checkpoint " + path);
    out << "cdg-checkpoint 1\n";
    out << "n " << cp.n << "\n";
    out << "next " << cp.next_mask << "\n";
    out << "classes " << cp.classes.size() << "\n";
    for (const auto& [canon, mask] : cp.classes) out << canon << ' ' << mask << "\n";
  }
  std::rename(tmp.c_str(), path.c_str());
}

std::optional<Checkpoint> load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  auto bad = [&path](const std::string& what) {
    return Error(ErrorCode::MalformedInput,
                 "checkpoint " + path + " is unreadable: " + what);
  };
  std::string word;
  int version = 0;
  if (!(in >> word >> version) || word != "cdg-checkpoint" || version != 1)
    throw bad("missing header");
  Checkpoint cp;
  std::size_t count = 0;
  if (!(in >> word >> cp.n) || word != "n") throw bad("missing n");
  if (!(in >> word >> cp.next_mask) || word != "next") throw bad("missing next");
  if (!(in >> word >> count) || word != "classes") throw bad("missing classes");
  for (std::size_t i = 0; i < count; ++i) {
    std::string canon;
    std::uint64_t mask = 0;
    if (!(in >> canon >> mask)) throw bad("truncated class list");
    cp.classes.emplace(std::move(canon), mask);
  }
  return cp;
}

namespace {

// Merges finished chunks strictly in mask order so that checkpoints always
// describe a contiguous prefix and results never depend on scheduling.
struct OrderedMerge {
  std::mutex mu;
  std::map<std::uint64_t, ClassMap> pending;  // chunk start -> result
  std::uint64_t watermark;
  std::uint64_t lo;
  std::uint64_t hi;
  ClassMap merged;
  int n;
  std::string checkpoint_path;
  bool progress = false;
  std::uint64_t masks_since_save = 0;
  std::uint64_t masks_since_report = 0;

  void chunk_done(std::uint64_t start, ClassMap result) {
    std::lock_guard<std::mutex> lock(mu);
    pending.emplace(start, std::move(result));
    while (!pending.empty() && pending.begin()->first == watermark) {
      auto node = pending.extract(pending.begin());
      std::uint64_t span = std::min(watermark + kChunkMasks, hi) - watermark;
      for (auto& [canon, mask] : node.mapped()) {
        auto [it, inserted] = merged.emplace(canon, mask);
        if (!inserted) it->second = std::min(it->second, mask);
      }
      watermark += span;
      masks_since_save += span;
      masks_since_report += span;
    }
    if (!checkpoint_path.empty() &&
        (masks_since_save >= 4 * kChunkMasks || watermark == hi)) {
      save_checkpoint(checkpoint_path, {n, watermark, merged});
      masks_since_save = 0;
    }
    if (progress && (masks_since_report >= (std::uint64_t{1} << 22) ||
                     (watermark == hi && masks_since_report > 0))) {
      std::cerr << "enumerate: " << (watermark - lo) << "/" << (hi - lo)
                << " masks, " << merged.size() << " classes\n";
      masks_since_report = 0;
    }
  }
};

}  // namespace

ClassMap enumerate_range(int n, std::uint64_t lo, std::uint64_t hi,
                         const ClassMap& seed, int workers,
                         const std::string& checkpoint_path, bool progress) {
  check_enum_n(n);
  if (hi < lo)
    throw Error(ErrorCode::MalformedInput, "mask range is reversed");
  if (workers < 1) workers = 1;

  OrderedMerge merge;
  merge.watermark = lo;
  merge.lo = lo;
  merge.hi = hi;
  merge.merged = seed;
  merge.n = n;
  merge.checkpoint_path = checkpoint_path;
  merge.progress = progress;
  if (lo == hi) {
    if (!checkpoint_path.empty()) save_checkpoint(checkpoint_path, {n, hi, seed});
    return merge.merged;
  }

  std::uint64_t chunk_count = (hi - lo + kChunkMasks - 1) / kChunkMasks;
  std::atomic<std::uint64_t> next_chunk{0};
  auto work = [&]() {
    std::uint32_t rows[8];
    for (;;) {
      std::uint64_t c = next_chunk.fetch_add(1);
      if (c >= chunk_count) return;
      std::uint64_t start = lo + c * kChunkMasks;
      std::uint64_t end = std::min(start + kChunkMasks, hi);
      ClassMap local;
      for (std::uint64_t mask = start; mask < end; ++mask) {
        mask_to_rows(n, mask, rows);
        // Masks ascend within the chunk, so the first hit is the minimum.
        local.emplace(canonical_form_rows(n, rows), mask);
      }
      merge.chunk_done(start, std::move(local));
    }
  };

  int thread_count = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), chunk_count));
  if (thread_count <= 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }
  return merge.merged;
}

EnumSummary enumerate_graphs(int n, const EnumOptions& options) {
  check_enum_n(n);
  // Reject unknown filter names before doing any work.
  CatalogEntry probe;
  for (const auto& name : options.filters) (void)filter_matches(name, probe);

  std::uint64_t total = std::uint64_t{1} << slot_count(n);
  std::uint64_t lo = 0;
  ClassMap seed;
  if (!options.checkpoint_path.empty()) {
    if (auto cp = load_checkpoint(options.checkpoint_path)) {
      if (cp->n != n)
        throw Error(ErrorCode::MalformedInput,
                    "checkpoint is for n=" + std::to_string(cp->n) +
                        ", requested n=" + std::to_string(n));
      if (cp->next_mask > total)
        throw Error(ErrorCode::MalformedInput,
                    "checkpoint mask " + std::to_string(cp->next_mask) +
                        " exceeds the mask space of n=" + std::to_string(n));
      lo = cp->next_mask;
      seed = std::move(cp->classes);
    }
  }
  ClassMap classes = enumerate_range(n, lo, total, seed, options.workers,
                                     options.checkpoint_path, options.progress);

  EnumSummary summary;
  summary.n = n;
  summary.masks_total = total;
  summary.masks_examined = total - lo;
  summary.classes_total = classes.size();
  summary.filters = options.filters;
  for (const auto& name : known_filters()) summary.flag_counts.emplace_back(name, 0);

  // The class map is keyed by canonical form, which fixes the output order.
  for (const auto& [canon, mask] : classes) {
    CatalogEntry entry = classify_mask(n, mask, options.mode);
    for (auto& [name, count] : summary.flag_counts)
      if (filter_matches(name, entry)) ++count;
    bool keep = true;
    for (const auto& name : options.filters)
      if (!filter_matches(name, entry)) {
        keep = false;
        break;
      }
    if (keep) summary.entries.push_back(std::move(entry));
  }
  summary.classes_kept = summary.entries.size();
  return summary;
}

namespace {

void sweep_class(const LabeledGraph& g, std::uint64_t mask, T32Mode mode,
                 std::uint64_t& checks, std::vector<std::string>* violations) {
  auto describe = [&](const std::string& what) {
    std::ostringstream out;
    out << "class " << mask << " on " << g.order() << " vertices: " << what;
    violations->push_back(out.str());
  };

  auto record = crosscheck(g, mode);
  ++checks;
  if (!record.agree)
    describe("direct test and " + record.route + " disagree (" + record.note + ")");

  auto flags = compute_flags(g, mode);
  if (flags.palfy) {
    ++checks;
    if (flags.components > 2)
      describe("passes the three-prime condition with " +
               std::to_string(flags.components) + " components");
    if (flags.components == 2) {
      ++checks;
      for (const auto& comp : connected_components(g))
        if (!is_complete(g.induced(comp)))
          describe("passes the three-prime condition with an incomplete component");
    }
    if (flags.diameter && *flags.diameter == 3 && flags.cut_vertices > 0) {
      ++checks;
      if (flags.eulerian)
        describe("three-prime diameter-three graph with a cut vertex is Eulerian");
    }
  }
  if (flags.pipeline_pass) {
    ++checks;
    if (flags.cut_vertices > 1)
      describe("pipeline passer has " + std::to_string(flags.cut_vertices) +
               " cut vertices");
    if (flags.cut_edges > 2)
      describe("pipeline passer has " + std::to_string(flags.cut_edges) +
               " cut edges");
    if (flags.diameter && *flags.diameter > 3)
      describe("pipeline passer has diameter " + std::to_string(*flags.diameter));
    auto blocks = block_decomposition(g);
    if (blocks.blocks.size() > 2)
      describe("pipeline passer splits into " +
               std::to_string(blocks.blocks.size()) + " blocks");
  }
}

}  // namespace

SweepReport sweep_validate(int n, T32Mode mode, int workers) {
  if (n < 1 || n > 7)
    throw Error(ErrorCode::BadN,
                "the exhaustive sweep covers 1 <= n <= 7, got " + std::to_string(n));
  SweepReport report;
  report.n = n;
  std::uint64_t total = std::uint64_t{1} << slot_count(n);
  ClassMap classes = enumerate_range(n, 0, total, {}, workers);
  report.classes = classes.size();
  for (const auto& [canon, mask] : classes) {
    auto g = graph_from_mask(n, mask);
    sweep_class(g, mask, mode, report.checks, &report.violations);
  }
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

}  // namespace cdg
