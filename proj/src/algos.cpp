#include "cdg/algos.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <queue>
#include <set>

namespace cdg {

namespace {

std::vector<std::vector<int>> components_by_index(const LabeledGraph& g) {
  const int n = g.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<std::size_t>(start)] != -1) continue;
    std::vector<int> members;
    std::queue<int> q;
    q.push(start);
    comp[static_cast<std::size_t>(start)] = static_cast<int>(out.size());
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      members.push_back(u);
      for (int v = 0; v < n; ++v)
        if (g.adjacent(u, v) && comp[static_cast<std::size_t>(v)] == -1) {
          comp[static_cast<std::size_t>(v)] = static_cast<int>(out.size());
          q.push(v);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

std::vector<std::vector<Prime>> connected_components(const LabeledGraph& g) {
  std::vector<std::vector<Prime>> out;
  for (const auto& comp : components_by_index(g)) {
    std::vector<Prime> labels;
    labels.reserve(comp.size());
    for (int i : comp) labels.push_back(g.label(i));
    out.push_back(std::move(labels));
  }
  return out;
}

DistanceTable distance_table(const LabeledGraph& g) {
  const int n = g.order();
  DistanceTable table;
  table.dist.assign(static_cast<std::size_t>(n),
                    std::vector<int>(static_cast<std::size_t>(n),
                                     DistanceTable::kUnreachable));
  for (int s = 0; s < n; ++s) {
    auto& d = table.dist[static_cast<std::size_t>(s)];
    d[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v)
        if (g.adjacent(u, v) && d[static_cast<std::size_t>(v)] == DistanceTable::kUnreachable) {
          d[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(u)] + 1;
          q.push(v);
        }
    }
  }
  return table;
}

std::optional<int> diameter(const LabeledGraph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  auto table = distance_table(g);
  int best = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int d = table.at(i, j);
      if (d == DistanceTable::kUnreachable) return std::nullopt;
      best = std::max(best, d);
    }
  return best;
}

BlockDecomposition block_decomposition(const LabeledGraph& g) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> cut(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::vector<int>> blocks_idx;
  int timer = 0;

  struct Frame {
    int u;
    int next;
  };

  for (int root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] != -1) continue;
    if (g.degree(root) == 0) {
      // An isolated vertex is its own block.
      disc[static_cast<std::size_t>(root)] = timer++;
      blocks_idx.push_back({root});
      continue;
    }
    int root_children = 0;
    std::vector<Frame> stack{{root, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      int u = f.u;
      if (f.next < n) {
        int v = f.next++;
        if (!g.adjacent(u, v) || v == parent[static_cast<std::size_t>(u)]) continue;
        if (disc[static_cast<std::size_t>(v)] == -1) {
          edge_stack.emplace_back(u, v);
          parent[static_cast<std::size_t>(v)] = u;
          disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
          if (u == root) ++root_children;
          stack.push_back({v, 0});
        } else if (disc[static_cast<std::size_t>(v)] < disc[static_cast<std::size_t>(u)]) {
          // Back edge, recorded once by the deeper endpoint.
          edge_stack.emplace_back(u, v);
          low[static_cast<std::size_t>(u)] =
              std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
        }
      } else {
        stack.pop_back();
        if (stack.empty()) break;
        int p = stack.back().u;
        low[static_cast<std::size_t>(p)] =
            std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(u)]);
        if (low[static_cast<std::size_t>(u)] >= disc[static_cast<std::size_t>(p)]) {
          // p separates the subtree rooted at u: pop one block.
          std::set<int> verts;
          std::pair<int, int> e;
          do {
            e = edge_stack.back();
            edge_stack.pop_back();
            verts.insert(e.first);
            verts.insert(e.second);
          } while (!(e.first == p && e.second == u));
          blocks_idx.emplace_back(verts.begin(), verts.end());
          if (p != root) cut[static_cast<std::size_t>(p)] = 1;
        }
      }
    }
    if (root_children >= 2) cut[static_cast<std::size_t>(root)] = 1;
  }

  BlockDecomposition out;
  for (const auto& idx : blocks_idx) {
    std::vector<Prime> labels;
    labels.reserve(idx.size());
    for (int i : idx) labels.push_back(g.label(i));
    std::sort(labels.begin(), labels.end());
    out.blocks.push_back(std::move(labels));
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  for (int i = 0; i < n; ++i)
    if (cut[static_cast<std::size_t>(i)]) out.cut_vertices.push_back(g.label(i));
  // In a simple graph a bridge is exactly a two-vertex block.
  for (const auto& b : out.blocks)
    if (b.size() == 2) out.bridges.emplace_back(b[0], b[1]);
  return out;
}

bool is_block(const LabeledGraph& g) {
  if (g.order() == 0) return false;
  if (connected_components(g).size() != 1) return false;
  return block_decomposition(g).cut_vertices.empty();
}

EulerianCheck is_eulerian_direct(const LabeledGraph& g) {
  const int n = g.order();
  if (n == 0) return {true, "empty graph"};
  if (connected_components(g).size() > 1) return {false, "disconnected"};
  for (int i = 0; i < n; ++i)
    if (g.degree(i) % 2 != 0)
      return {false, "vertex " + std::to_string(g.label(i)) + " has odd degree " +
                         std::to_string(g.degree(i))};
  return {true, "connected with all degrees even"};
}

std::vector<int> degree_sequence(const LabeledGraph& g) {
  std::vector<int> degrees;
  degrees.reserve(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) degrees.push_back(g.degree(i));
  std::sort(degrees.rbegin(), degrees.rend());
  return degrees;
}

bool is_k_regular(const LabeledGraph& g, int k) {
  for (int i = 0; i < g.order(); ++i)
    if (g.degree(i) != k) return false;
  return true;
}

bool is_regular(const LabeledGraph& g) {
  if (g.order() == 0) return true;
  return is_k_regular(g, g.degree(0));
}

bool is_complete(const LabeledGraph& g) {
  return is_k_regular(g, g.order() - 1) || g.order() == 0;
}

namespace {

constexpr int kMaxN = kCanonicalHardMax;

// graph6 encoding of an n-vertex adjacency matrix where rows[j] holds the
// bits of column j against earlier positions (bit i = x(i,j), i < j).  This
// is exactly the column order the format wants.
std::string graph6_encode(int n, const std::array<std::uint32_t, kMaxN>& rows) {
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int cur = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      cur = (cur << 1) | static_cast<int>((rows[static_cast<std::size_t>(j)] >> i) & 1u);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + cur));
        cur = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (cur << (6 - nbits))));
  return out;
}

// Canonical labelling by iterated colour refinement plus branch-and-bound over
// colour-respecting vertex orderings.  The refinement colours are computed
// the same way for every labelling of a graph, so restricting the search to
// orderings that list colour classes in canonical order keeps the extremum an
// isomorphism invariant while pruning most of the n! permutations.
struct Canonicalizer {
  int n = 0;
  std::array<std::uint32_t, kMaxN> adj{};
  std::array<int, kMaxN> color{};
  std::array<int, kMaxN> pos_color{};
  std::array<std::uint32_t, kMaxN> best{};
  std::array<std::uint32_t, kMaxN> cur{};
  std::array<int, kMaxN> perm{};
  std::uint32_t used = 0;
  bool have_best = false;

  void refine() {
    std::array<int, kMaxN> uniq{};
    for (int v = 0; v < n; ++v)
      uniq[static_cast<std::size_t>(v)] = std::popcount(adj[static_cast<std::size_t>(v)]);
    std::array<int, kMaxN> sorted = uniq;
    std::sort(sorted.begin(), sorted.begin() + n);
    auto* end = std::unique(sorted.begin(), sorted.begin() + n);
    int count = static_cast<int>(end - sorted.begin());
    for (int v = 0; v < n; ++v)
      color[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(sorted.begin(), end, uniq[static_cast<std::size_t>(v)]) -
          sorted.begin());

    while (count < n) {
      // Signature: own colour followed by the sorted colours of neighbours.
      std::array<std::array<int, kMaxN + 1>, kMaxN> sig;
      std::array<int, kMaxN> len{};
      for (int v = 0; v < n; ++v) {
        int k = 0;
        sig[static_cast<std::size_t>(v)][static_cast<std::size_t>(k++)] =
            color[static_cast<std::size_t>(v)];
        for (int u = 0; u < n; ++u)
          if ((adj[static_cast<std::size_t>(v)] >> u) & 1u)
            sig[static_cast<std::size_t>(v)][static_cast<std::size_t>(k++)] =
                color[static_cast<std::size_t>(u)];
        std::sort(sig[static_cast<std::size_t>(v)].begin() + 1,
                  sig[static_cast<std::size_t>(v)].begin() + k);
        len[static_cast<std::size_t>(v)] = k;
      }
      std::array<int, kMaxN> order{};
      std::iota(order.begin(), order.begin() + n, 0);
      std::sort(order.begin(), order.begin() + n, [&](int a, int b) {
        return std::lexicographical_compare(
            sig[static_cast<std::size_t>(a)].begin(),
            sig[static_cast<std::size_t>(a)].begin() + len[static_cast<std::size_t>(a)],
            sig[static_cast<std::size_t>(b)].begin(),
            sig[static_cast<std::size_t>(b)].begin() + len[static_cast<std::size_t>(b)]);
      });
      std::array<int, kMaxN> next{};
      int c = 0;
      for (int idx = 0; idx < n; ++idx) {
        if (idx > 0) {
          int a = order[static_cast<std::size_t>(idx - 1)];
          int b = order[static_cast<std::size_t>(idx)];
          bool same = len[static_cast<std::size_t>(a)] == len[static_cast<std::size_t>(b)] &&
                      std::equal(sig[static_cast<std::size_t>(a)].begin(),
                                 sig[static_cast<std::size_t>(a)].begin() +
                                     len[static_cast<std::size_t>(a)],
                                 sig[static_cast<std::size_t>(b)].begin());
          if (!same) ++c;
        }
        next[static_cast<std::size_t>(order[static_cast<std::size_t>(idx)])] = c;
      }
      int new_count = c + 1;
      color = next;
      if (new_count == count) break;  // stable partition
      count = new_count;
    }
  }

  // Branch and bound for the maximal row vector.  `tight` means the current
  // prefix equalled the best prefix when each level was entered; it can go
  // stale when `best` improves mid-search, but stale pruning only discards
  // orderings that are provably dominated, and leaves always do a full
  // comparison before replacing `best`.
  void dfs(int i, bool tight) {
    if (i == n) {
      if (!have_best) {
        best = cur;
        have_best = true;
        return;
      }
      if (!tight) {
        for (int k = 0; k < n; ++k) {
          if (cur[static_cast<std::size_t>(k)] == best[static_cast<std::size_t>(k)]) continue;
          if (cur[static_cast<std::size_t>(k)] > best[static_cast<std::size_t>(k)]) best = cur;
          return;
        }
      }
      return;
    }
    std::uint32_t tried = 0;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u) continue;
      if (color[static_cast<std::size_t>(v)] != pos_color[static_cast<std::size_t>(i)])
        continue;
      // Twin prune: if an already-tried candidate u at this level has the
      // same adjacency as v everywhere outside {u, v}, the transposition
      // (u v) is an automorphism, so v's subtree repeats u's row matrices.
      // Without this, graphs with large symmetric colour classes (complete
      // or edgeless ones in the extreme) degrade to factorial search.
      bool twin = false;
      for (int u = 0; u < v && !twin; ++u) {
        if (!((tried >> u) & 1u)) continue;
        std::uint32_t off =
            ~((std::uint32_t{1} << u) | (std::uint32_t{1} << v));
        twin = ((adj[static_cast<std::size_t>(u)] ^
                 adj[static_cast<std::size_t>(v)]) & off) == 0;
      }
      if (twin) continue;
      tried |= std::uint32_t{1} << v;
      std::uint32_t row = 0;
      for (int j = 0; j < i; ++j)
        row |= ((adj[static_cast<std::size_t>(v)] >>
                 perm[static_cast<std::size_t>(j)]) & 1u)
               << j;
      bool next_tight = tight;
      if (have_best && tight) {
        if (row < best[static_cast<std::size_t>(i)]) continue;
        next_tight = row == best[static_cast<std::size_t>(i)];
      }
      cur[static_cast<std::size_t>(i)] = row;
      perm[static_cast<std::size_t>(i)] = v;
      used |= std::uint32_t{1} << v;
      dfs(i + 1, next_tight);
      used &= ~(std::uint32_t{1} << v);
    }
  }

  std::string run() {
    if (n == 0) return std::string(1, static_cast<char>(63));
    refine();
    pos_color = color;
    std::sort(pos_color.begin(), pos_color.begin() + n);
    have_best = false;
    used = 0;
    dfs(0, true);
    return graph6_encode(n, best);
  }
};

}  // namespace

std::string canonical_form_rows(int n, const std::uint32_t* rows) {
  Canonicalizer canon;
  canon.n = n;
  for (int i = 0; i < n; ++i) canon.adj[static_cast<std::size_t>(i)] = rows[i];
  return canon.run();
}

std::string canonical_form(const LabeledGraph& g, int max_order) {
  const int n = g.order();
  const int bound = std::min(max_order, kCanonicalHardMax);
  if (n > bound)
    throw Error(ErrorCode::TooLarge,
                "canonical form supports at most " + std::to_string(bound) +
                    " vertices, got " + std::to_string(n));
  std::array<std::uint32_t, kMaxN> rows{};
  for (int i = 0; i < n; ++i)
    rows[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(g.row(i));
  return canonical_form_rows(n, rows.data());
}

bool are_isomorphic(const LabeledGraph& a, const LabeledGraph& b, int max_order) {
  if (a.order() != b.order()) return false;
  if (a.size() != b.size()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_form(a, max_order) == canonical_form(b, max_order);
}

}  // namespace cdg
