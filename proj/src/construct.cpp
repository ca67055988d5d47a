#include "cdg/construct.hpp"

#include <algorithm>
#include <sstream>

#include "cdg/algos.hpp"

namespace cdg {

namespace {

std::string join_primes(const std::vector<Prime>& ps) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out << ',';
    out << ps[i];
  }
  return out.str();
}

std::vector<Prime> split_primes(const std::string& text) {
  std::vector<Prime> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    out.push_back(static_cast<Prime>(std::stoul(item)));
  return out;
}

std::string find_param(const ConstructionRecipe& r, const std::string& key) {
  for (const auto& [k, v] : r.parameters)
    if (k == key) return v;
  throw Error(ErrorCode::MalformedInput,
              "recipe of kind \"" + r.kind + "\" is missing parameter \"" + key + "\"");
}

}  // namespace

PrimePool::PrimePool(Prime limit) : limit_(limit) {}

void PrimePool::reserve_graph(const LabeledGraph& g) {
  for (Prime p : g.labels()) used_.insert(p);
}

Prime PrimePool::scan(Prime start, bool odd_only) {
  for (Prime p = start; p <= limit_; ++p) {
    if (odd_only && p % 2 == 0) continue;
    if (!is_prime(p)) continue;
    if (used_.count(p)) continue;
    used_.insert(p);
    return p;
  }
  throw Error(ErrorCode::PoolExhausted,
              "no unused prime available below " + std::to_string(limit_));
}

Prime PrimePool::take() { return scan(2, false); }

Prime PrimePool::take_odd() { return scan(3, true); }

ConstructionRecipe input_recipe(const std::string& source) {
  return {"base-figure", {{"source", source}}, {}};
}

LabeledGraph direct_product(const LabeledGraph& a, const LabeledGraph& b) {
  for (Prime p : a.labels())
    if (b.contains(p))
      throw Error(ErrorCode::LabelCollision,
                  "vertex " + std::to_string(p) + " occurs in both factors");
  std::vector<Prime> vertices = a.labels();
  vertices.insert(vertices.end(), b.labels().begin(), b.labels().end());
  auto edges = a.edges();
  for (const auto& e : b.edges()) edges.push_back(e);
  for (Prime p : a.labels())
    for (Prime q : b.labels()) edges.emplace_back(p, q);
  return LabeledGraph::build(std::move(vertices), edges, {.require_primes = false});
}

LabeledGraph two_component_graph(Prime p, const std::vector<Prime>& qs) {
  if (p == 2) throw Error(ErrorCode::EvenP, "the isolated prime must be odd");
  if (!is_prime(p))
    throw Error(ErrorCode::NonPrimeLabel,
                "label " + std::to_string(p) + " is not prime");
  if (qs.empty())
    throw Error(ErrorCode::BadN, "need at least one prime for the complete part");
  for (Prime q : qs)
    if (q == p)
      throw Error(ErrorCode::LabelCollision,
                  "prime " + std::to_string(p) + " occurs on both sides");
  std::vector<Prime> vertices = qs;
  std::vector<std::pair<Prime, Prime>> edges;
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = i + 1; j < qs.size(); ++j) edges.emplace_back(qs[i], qs[j]);
  vertices.push_back(p);
  return LabeledGraph::build(std::move(vertices), edges);
}

Constructed operation_d(const LabeledGraph& g, PrimePool& pool,
                        ConstructionRecipe base) {
  pool.reserve_graph(g);
  Prime p = pool.take_odd();
  Prime q = pool.take();
  auto pair = LabeledGraph::build({p, q}, {});
  Constructed out;
  out.graph = direct_product(g, pair);
  if (base.kind.empty()) base = input_recipe("input");
  out.recipe = {"operation-d",
                {{"p", std::to_string(p)}, {"q", std::to_string(q)}},
                {std::move(base)}};
  return out;
}

Constructed regular_family(int n, PrimePool& pool) {
  if (n < 4 || n % 2 != 0)
    throw Error(ErrorCode::BadN,
                "the regular family exists for even n >= 4, got " + std::to_string(n));
  if (n == 4) {
    std::vector<Prime> ps;
    for (int i = 0; i < 4; ++i) ps.push_back(pool.take());
    Constructed out;
    out.graph = LabeledGraph::build(
        ps, {{ps[0], ps[1]}, {ps[1], ps[2]}, {ps[2], ps[3]}, {ps[3], ps[0]}});
    out.recipe = {"regular-family",
                  {{"n", "4"}, {"cycle", join_primes(ps)}},
                  {}};
    return out;
  }
  Constructed smaller = regular_family(n - 2, pool);
  Constructed lifted = operation_d(smaller.graph, pool, std::move(smaller.recipe));
  // Sanity check mandated by the family's defining property.
  if (!is_k_regular(lifted.graph, n - 2))
    throw Error(ErrorCode::InternalCheckFailed,
                "regular family member on " + std::to_string(n) +
                    " vertices is not (n-2)-regular");
  return lifted;
}

int lower_bound(int n) {
  if (n < 6 || n % 2 != 0)
    throw Error(ErrorCode::BadN,
                "the bound is defined for even n >= 6, got " + std::to_string(n));
  return (n - 4) / 2 + n / 6 - 1;
}

namespace {

// One member of the catalogue under construction, carrying the pool it has
// been drawing from so lifts can continue with fresh primes.
struct BuildState {
  LabeledGraph graph;
  ConstructionRecipe recipe;
  PrimePool pool;
  std::string stream;
};

// Join of a triangle-plus-isolated-vertex with two non-adjacent vertices:
// the 6-vertex base member (degree sequence 4,4,4,4,4,2).
Constructed base_member6(PrimePool& pool) {
  Prime p = pool.take_odd();
  std::vector<Prime> qs;
  for (int i = 0; i < 3; ++i) qs.push_back(pool.take());
  auto core = two_component_graph(p, qs);
  ConstructionRecipe core_recipe{
      "two-component", {{"p", std::to_string(p)}, {"qs", join_primes(qs)}}, {}};
  return operation_d(core, pool, std::move(core_recipe));
}

BuildState fresh_member(int n, PrimePool pool) {
  BuildState state{LabeledGraph{}, {}, pool, "two-component-fresh"};
  Prime p = state.pool.take_odd();
  std::vector<Prime> qs;
  for (int i = 0; i < n - 3; ++i) qs.push_back(state.pool.take());
  auto core = two_component_graph(p, qs);
  ConstructionRecipe core_recipe{
      "two-component", {{"p", std::to_string(p)}, {"qs", join_primes(qs)}}, {}};
  auto built = operation_d(core, state.pool, std::move(core_recipe));
  state.graph = std::move(built.graph);
  state.recipe = std::move(built.recipe);
  return state;
}

// Join of r copies of the 6-vertex base member: r vertices of degree 6r-4
// and 5r vertices of degree 6r-2.
BuildState product_member(int r, PrimePool pool) {
  BuildState state{LabeledGraph{}, {}, pool, "product-chain"};
  auto first = base_member6(state.pool);
  state.graph = std::move(first.graph);
  state.recipe = std::move(first.recipe);
  for (int i = 1; i < r; ++i) {
    auto factor = base_member6(state.pool);
    state.graph = direct_product(state.graph, factor.graph);
    state.recipe = {"direct-product",
                    {},
                    {std::move(state.recipe), std::move(factor.recipe)}};
  }
  return state;
}

std::vector<BuildState> catalog_states(int n, const PrimePool& base_pool) {
  if (n == 6) {
    std::vector<BuildState> out;
    out.push_back(fresh_member(6, base_pool));
    return out;
  }
  std::vector<BuildState> lifted;
  for (auto& prev : catalog_states(n - 2, base_pool)) {
    auto built = operation_d(prev.graph, prev.pool, std::move(prev.recipe));
    lifted.push_back({std::move(built.graph), std::move(built.recipe), prev.pool,
                      "operation-d-lift"});
  }
  // Present lifted members in ascending degree-sequence order; the other
  // streams follow.
  std::sort(lifted.begin(), lifted.end(), [](const BuildState& a, const BuildState& b) {
    auto da = degree_sequence(a.graph);
    auto db = degree_sequence(b.graph);
    std::reverse(da.begin(), da.end());
    std::reverse(db.begin(), db.end());
    return da < db;
  });
  std::vector<BuildState> out = std::move(lifted);
  if (n % 6 == 0 && n >= 12) out.push_back(product_member(n / 6, base_pool));
  out.push_back(fresh_member(n, base_pool));
  return out;
}

}  // namespace

std::vector<CatalogMember> eulerian_catalog(int n, PrimePool& pool) {
  int bound = lower_bound(n);  // also validates n
  auto states = catalog_states(n, pool);

  std::vector<CatalogMember> members;
  for (auto& s : states) {
    ConstructionRecipe wrapped{"catalog-member",
                               {{"n", std::to_string(n)}, {"stream", s.stream}},
                               {std::move(s.recipe)}};
    members.push_back({std::move(s.graph), std::move(wrapped), s.stream});
  }

  // Verify every promised property; these are construction guarantees, so a
  // failure is a bug, not bad input.
  auto fail = [n](const std::string& what) {
    throw Error(ErrorCode::InternalCheckFailed,
                "catalogue member on " + std::to_string(n) + " vertices " + what);
  };
  for (const auto& m : members) {
    if (m.graph.order() != n) fail("has the wrong order");
    if (is_regular(m.graph)) fail("is regular");
    if (!is_block(m.graph)) fail("is not a block");
    auto diam = diameter(m.graph);
    if (!diam || *diam != 2) fail("does not have diameter two");
    if (!is_eulerian_direct(m.graph).eulerian) fail("is not Eulerian");
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      bool distinct_degrees =
          degree_sequence(members[i].graph) != degree_sequence(members[j].graph);
      if (distinct_degrees) continue;
      if (n <= kCanonicalDefaultMax) {
        if (canonical_form(members[i].graph) != canonical_form(members[j].graph))
          continue;
        fail("duplicates another member (canonical forms equal)");
      }
      fail("cannot be certified distinct from another member");
    }
  if (static_cast<int>(members.size()) < bound)
    fail("count " + std::to_string(members.size()) + " is below the bound " +
         std::to_string(bound));
  return members;
}

LabeledGraph replay_recipe(const ConstructionRecipe& recipe) {
  if (recipe.kind == "two-component") {
    Prime p = static_cast<Prime>(std::stoul(find_param(recipe, "p")));
    return two_component_graph(p, split_primes(find_param(recipe, "qs")));
  }
  if (recipe.kind == "direct-product") {
    if (recipe.children.size() != 2)
      throw Error(ErrorCode::MalformedInput, "direct-product needs two children");
    return direct_product(replay_recipe(recipe.children[0]),
                          replay_recipe(recipe.children[1]));
  }
  if (recipe.kind == "operation-d") {
    if (recipe.children.size() != 1)
      throw Error(ErrorCode::MalformedInput, "operation-d needs one child");
    Prime p = static_cast<Prime>(std::stoul(find_param(recipe, "p")));
    Prime q = static_cast<Prime>(std::stoul(find_param(recipe, "q")));
    auto pair = LabeledGraph::build({p, q}, {});
    return direct_product(replay_recipe(recipe.children[0]), pair);
  }
  if (recipe.kind == "regular-family") {
    auto ps = split_primes(find_param(recipe, "cycle"));
    if (ps.size() != 4)
      throw Error(ErrorCode::MalformedInput, "regular-family base needs four primes");
    return LabeledGraph::build(
        ps, {{ps[0], ps[1]}, {ps[1], ps[2]}, {ps[2], ps[3]}, {ps[3], ps[0]}});
  }
  if (recipe.kind == "catalog-member") {
    if (recipe.children.size() != 1)
      throw Error(ErrorCode::MalformedInput, "catalog-member needs one child");
    return replay_recipe(recipe.children[0]);
  }
  throw Error(ErrorCode::MalformedInput,
              "cannot replay recipe of kind \"" + recipe.kind + "\"");
}

}  // namespace cdg
