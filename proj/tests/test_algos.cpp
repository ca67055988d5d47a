#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "cdg/algos.hpp"
#include "test_util.hpp"

using namespace cdg;
using namespace cdg::test;

TEST_CASE("connected components are sorted label sets") {
  auto g = make_graph({2, 3, 5, 7, 11}, {{3, 7}, {2, 11}});
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<Prime>{2, 11});
  CHECK(comps[1] == std::vector<Prime>{3, 7});
  CHECK(comps[2] == std::vector<Prime>{5});

  CHECK(connected_components(LabeledGraph{}).empty());
  CHECK(connected_components(LabeledGraph::complete({2, 3, 5})).size() == 1);
}

TEST_CASE("distance table and diameter") {
  auto p4 = path_graph({2, 3, 5, 7});
  auto table = distance_table(p4);
  CHECK(table.at(0, 0) == 0);
  CHECK(table.at(0, 1) == 1);
  CHECK(table.at(0, 3) == 3);
  CHECK(table.at(3, 0) == 3);
  CHECK(diameter(p4) == 3);

  auto split = make_graph({2, 3, 5}, {{2, 3}});
  CHECK(distance_table(split).at(0, 2) == DistanceTable::kUnreachable);
  CHECK_FALSE(diameter(split).has_value());

  CHECK(diameter(LabeledGraph{}) == 0);
  CHECK(diameter(make_graph({2}, {})) == 0);
  CHECK(diameter(LabeledGraph::complete({2, 3, 5, 7})) == 1);
  CHECK(diameter(cycle_graph({2, 3, 5, 7})) == 2);
  CHECK(diameter(cycle_graph({2, 3, 5, 7, 11, 13})) == 3);
}

TEST_CASE("block decomposition oracle cases") {
  SUBCASE("single vertex is its own block") {
    auto b = block_decomposition(make_graph({2}, {}));
    CHECK(b.blocks == std::vector<std::vector<Prime>>{{2}});
    CHECK(b.cut_vertices.empty());
    CHECK(b.bridges.empty());
  }

  SUBCASE("a single edge is a block and a bridge") {
    auto b = block_decomposition(make_graph({2, 3}, {{2, 3}}));
    CHECK(b.blocks == std::vector<std::vector<Prime>>{{2, 3}});
    CHECK(b.cut_vertices.empty());
    CHECK(b.bridges == std::vector<std::pair<Prime, Prime>>{{2, 3}});
  }

  SUBCASE("path on three vertices") {
    auto b = block_decomposition(path_graph({2, 3, 5}));
    CHECK(b.blocks == std::vector<std::vector<Prime>>{{2, 3}, {3, 5}});
    CHECK(b.cut_vertices == std::vector<Prime>{3});
    CHECK(b.bridges == std::vector<std::pair<Prime, Prime>>{{2, 3}, {3, 5}});
  }

  SUBCASE("triangle with a pendant edge") {
    auto b = block_decomposition(
        make_graph({2, 3, 5, 7}, {{2, 3}, {2, 5}, {3, 5}, {5, 7}}));
    CHECK(b.blocks == std::vector<std::vector<Prime>>{{2, 3, 5}, {5, 7}});
    CHECK(b.cut_vertices == std::vector<Prime>{5});
    CHECK(b.bridges == std::vector<std::pair<Prime, Prime>>{{5, 7}});
  }

  SUBCASE("two triangles sharing a vertex") {
    auto b = block_decomposition(make_graph(
        {2, 3, 5, 7, 11}, {{2, 3}, {2, 5}, {3, 5}, {5, 7}, {5, 11}, {7, 11}}));
    CHECK(b.blocks == std::vector<std::vector<Prime>>{{2, 3, 5}, {5, 7, 11}});
    CHECK(b.cut_vertices == std::vector<Prime>{5});
    CHECK(b.bridges.empty());
  }

  SUBCASE("isolated vertex next to an edge") {
    auto b = block_decomposition(make_graph({2, 3, 5}, {{2, 3}}));
    CHECK(b.blocks == std::vector<std::vector<Prime>>{{2, 3}, {5}});
    CHECK(b.cut_vertices.empty());
    CHECK(b.bridges == std::vector<std::pair<Prime, Prime>>{{2, 3}});
  }

  SUBCASE("interchange fixture with one cut vertex") {
    auto b = block_decomposition(load_fixture("figure2"));
    CHECK(b.blocks ==
          std::vector<std::vector<Prime>>{{2, 3, 5, 11}, {7, 11, 13}});
    CHECK(b.cut_vertices == std::vector<Prime>{11});
    CHECK(b.bridges.empty());
  }
}

TEST_CASE("is_block") {
  CHECK_FALSE(is_block(LabeledGraph{}));
  CHECK(is_block(make_graph({2}, {})));
  CHECK(is_block(make_graph({2, 3}, {{2, 3}})));
  CHECK(is_block(cycle_graph({2, 3, 5, 7})));
  CHECK_FALSE(is_block(path_graph({2, 3, 5})));
  CHECK_FALSE(is_block(make_graph({2, 3}, {})));
  CHECK_FALSE(is_block(load_fixture("figure2")));
  CHECK(is_block(load_fixture("figure3a")));
  CHECK(is_block(load_fixture("d3e")));
}

TEST_CASE("direct Euler test") {
  auto empty = is_eulerian_direct(LabeledGraph{});
  CHECK(empty.eulerian);
  CHECK(empty.reason == "empty graph");

  auto one = is_eulerian_direct(make_graph({2}, {}));
  CHECK(one.eulerian);
  CHECK(one.reason == "connected with all degrees even");

  auto disc = is_eulerian_direct(make_graph({2, 3}, {}));
  CHECK_FALSE(disc.eulerian);
  CHECK(disc.reason == "disconnected");

  auto odd = is_eulerian_direct(path_graph({2, 3, 5}));
  CHECK_FALSE(odd.eulerian);
  CHECK(odd.reason == "vertex 2 has odd degree 1");

  auto c5 = is_eulerian_direct(cycle_graph({2, 3, 5, 7, 11}));
  CHECK(c5.eulerian);
  CHECK(c5.reason == "connected with all degrees even");

  CHECK(is_eulerian_direct(LabeledGraph::complete(first_primes(5))).eulerian);
  CHECK_FALSE(is_eulerian_direct(LabeledGraph::complete(first_primes(4))).eulerian);
}

TEST_CASE("degree sequence and regularity") {
  auto star = make_graph({2, 3, 5, 7}, {{2, 3}, {2, 5}, {2, 7}});
  CHECK(degree_sequence(star) == std::vector<int>{3, 1, 1, 1});
  CHECK_FALSE(is_regular(star));

  auto c4 = cycle_graph({2, 3, 5, 7});
  CHECK(degree_sequence(c4) == std::vector<int>{2, 2, 2, 2});
  CHECK(is_regular(c4));
  CHECK(is_k_regular(c4, 2));
  CHECK_FALSE(is_k_regular(c4, 3));

  CHECK(is_complete(LabeledGraph{}));
  CHECK(is_complete(make_graph({2}, {})));
  CHECK(is_complete(LabeledGraph::complete({2, 3, 5})));
  CHECK_FALSE(is_complete(c4));
  CHECK(is_regular(LabeledGraph{}));
}

namespace {

LabeledGraph graph_of_mask(int n, std::uint32_t mask) {
  auto primes = first_primes(n);
  std::vector<std::pair<Prime, Prime>> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1u)
        edges.emplace_back(primes[static_cast<std::size_t>(i)],
                           primes[static_cast<std::size_t>(j)]);
  return LabeledGraph::build(primes, edges);
}

LabeledGraph permuted(const LabeledGraph& g, const std::vector<int>& perm) {
  // Rebuild the same abstract graph with labels moved along perm.
  const int n = g.order();
  std::vector<std::pair<Prime, Prime>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(i, j))
        edges.emplace_back(g.label(perm[static_cast<std::size_t>(i)]),
                           g.label(perm[static_cast<std::size_t>(j)]));
  return LabeledGraph::build(g.labels(), edges);
}

}  // namespace

TEST_CASE("canonical form matches brute-force isomorphism up to five vertices") {
  // Canonical forms partition all labeled graphs into classes; the oracle
  // checks that partition is exactly the isomorphism relation.
  const int expected_classes[] = {0, 1, 2, 4, 11, 34};
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::map<std::string, std::vector<std::uint32_t>> classes;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask)
      classes[canonical_form(graph_of_mask(n, mask))].push_back(mask);
    CHECK(static_cast<int>(classes.size()) == expected_classes[n]);

    // same canonical form => isomorphic (check every member against its rep)
    for (const auto& [canon, members] : classes) {
      auto rep = graph_of_mask(n, members.front());
      for (auto mask : members)
        REQUIRE(brute_force_isomorphic(rep, graph_of_mask(n, mask)));
    }
    // different canonical form => not isomorphic (reps pairwise)
    std::vector<LabeledGraph> reps;
    for (const auto& [canon, members] : classes)
      reps.push_back(graph_of_mask(n, members.front()));
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = a + 1; b < reps.size(); ++b)
        REQUIRE_FALSE(brute_force_isomorphic(reps[a], reps[b]));
  }
}

TEST_CASE("canonical form of six-vertex graphs is permutation invariant") {
  std::set<std::string> forms;
  for (std::uint32_t mask = 0; mask < (1u << 15); ++mask)
    forms.insert(canonical_form(graph_of_mask(6, mask)));
  CHECK(forms.size() == 156);

  std::mt19937 rng(20260815);
  std::vector<int> perm{0, 1, 2, 3, 4, 5};
  for (int trial = 0; trial < 200; ++trial) {
    std::uint32_t mask = rng() & ((1u << 15) - 1);
    auto g = graph_of_mask(6, mask);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(g) == canonical_form(permuted(g, perm)));
  }
}

TEST_CASE("canonical form agrees between graph and raw-row entry points") {
  auto g = load_fixture("figure2");
  std::vector<std::uint32_t> rows;
  for (int i = 0; i < g.order(); ++i)
    rows.push_back(static_cast<std::uint32_t>(g.row(i)));
  CHECK(canonical_form(g) == canonical_form_rows(g.order(), rows.data()));
}

TEST_CASE("graph6 spot values") {
  CHECK(canonical_form(LabeledGraph{}) == "?");
  CHECK(canonical_form(make_graph({2}, {})) == "@");
  CHECK(canonical_form(LabeledGraph::complete({2, 3, 5})) == "Bw");
  CHECK(canonical_form(make_graph({2, 3, 5}, {})) == "B?");
  CHECK(canonical_form(LabeledGraph::complete(first_primes(4))) == "C~");
}

TEST_CASE("canonical form size limits") {
  auto big = LabeledGraph::complete(first_primes(13));
  CHECK_THROWS_WITH_AS(canonical_form(big),
                       "TooLarge: canonical form supports at most 12 vertices, got 13",
                       Error);
  CHECK(canonical_form(big, 13) == canonical_form(big, 16));
  // the hard cap wins over a larger request
  auto huge = LabeledGraph::complete(first_primes(17));
  CHECK_THROWS_WITH_AS(canonical_form(huge, 32),
                       "TooLarge: canonical form supports at most 16 vertices, got 17",
                       Error);
}

TEST_CASE("are_isomorphic") {
  auto a = make_graph({2, 3, 5, 7}, {{2, 3}, {3, 5}, {5, 7}});
  auto b = make_graph({2, 3, 5, 7}, {{3, 7}, {2, 7}, {2, 5}});  // relabeled path
  CHECK(are_isomorphic(a, b));
  CHECK_FALSE(are_isomorphic(a, cycle_graph({2, 3, 5, 7})));    // size differs
  CHECK_FALSE(are_isomorphic(a, path_graph({2, 3, 5})));        // order differs
  auto star = make_graph({2, 3, 5, 7}, {{2, 3}, {2, 5}, {2, 7}});
  CHECK_FALSE(are_isomorphic(a, star));  // same size, different degrees

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_graph(7, 32768, rng);
    CHECK(are_isomorphic(g, g));
  }
}
