// Acceptance gate: drives the installed tool end to end and checks the
// seven contract criteria, printing one PASS/FAIL line per criterion.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cdg/algos.hpp"
#include "cdg/construct.hpp"
#include "cdg/graph.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
  double seconds = 0.0;
};

std::string fixture(const std::string& name) {
  return std::string(CDG_FIXTURES_DIR) + "/" + name + ".json";
}

RunResult run_tool(const std::string& args) {
  std::string cmd = std::string(CDG_TOOL_PATH) + " " + args + " 2>/dev/null";
  auto start = std::chrono::steady_clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  RunResult result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
  int status = pclose(pipe);
  auto end = std::chrono::steady_clock::now();
  result.seconds = std::chrono::duration<double>(end - start).count();
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

void expect_time(const RunResult& r, double budget, const std::string& what) {
  expect(r.seconds < budget, what + " took " + std::to_string(r.seconds) +
                                 "s (budget " + std::to_string(budget) + "s)");
}

cdg::LabeledGraph graph_from_json(const json& j) {
  std::vector<cdg::Prime> vertices;
  for (const auto& v : j.at("vertices")) vertices.push_back(v.get<cdg::Prime>());
  std::vector<std::pair<cdg::Prime, cdg::Prime>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<cdg::Prime>(), e.at(1).get<cdg::Prime>());
  return cdg::LabeledGraph::build(vertices, edges);
}

cdg::LabeledGraph load_fixture_graph(const std::string& name) {
  return cdg::parse_graph(slurp(fixture(name)));
}

json analyze_json(const std::string& name, int expected_exit) {
  auto r = run_tool("analyze " + fixture(name) + " --json");
  expect(r.exit_code == expected_exit,
         "analyze " + name + " exited " + std::to_string(r.exit_code) +
             ", expected " + std::to_string(expected_exit));
  expect_time(r, 1.0, "analyze " + name);
  return json::parse(r.output);
}

const json* find_condition(const json& report, const std::string& name) {
  for (const auto& c : report.at("pipeline").at("conditions"))
    if (c.at("name") == name) return &c;
  return nullptr;
}

// --------------------------------------------------------------- criteria

void criterion1() {
  auto fig1 = analyze_json("figure1", 1);
  expect(!fig1.at("pipeline").at("overall").get<bool>(),
         "figure1 should fail the pipeline");
  auto* p4 = find_condition(fig1, "not_p4");
  expect(p4 && !p4->at("pass").get<bool>(),
         "figure1 must fail the four-vertex-path condition");

  auto fig2 = analyze_json("figure2", 0);
  expect(fig2.at("diameter") == 2, "figure2 diameter should be 2");
  expect(fig2.at("blocks").at("blocks").size() == 2, "figure2 should have 2 blocks");
  expect(fig2.at("blocks").at("cut_vertices") == json::array({11}),
         "figure2 cut vertex should be 11");
  expect(!fig2.at("eulerian").at("direct").at("eulerian").get<bool>(),
         "figure2 should not be Eulerian");
  expect(fig2.at("pipeline").at("overall").get<bool>(),
         "figure2 should pass the pipeline");

  auto fig3a = analyze_json("figure3a", 0);
  expect(fig3a.at("order") == 6, "figure3a should have 6 vertices");
  expect(fig3a.at("degree_sequence") == json::array({4, 4, 4, 4, 4, 4}),
         "figure3a should be 4-regular");

  auto fig3c = analyze_json("figure3c", 0);
  expect(fig3c.at("order") == 8, "figure3c should have 8 vertices");
  expect(fig3c.at("degree_sequence") == json::array({6, 6, 6, 6, 6, 6, 6, 6}),
         "figure3c should be 6-regular");
  expect(fig3c.at("eulerian").at("direct").at("eulerian").get<bool>(),
         "figure3c should be Eulerian");
  expect(fig3c.at("eulerian").at("route") == "T3.1-ii",
         "figure3c should classify through route T3.1-ii");

  auto fig4 = analyze_json("figure4", 0);
  expect(fig4.at("degree_sequence") == json::array({4, 4, 4, 4, 4, 2}),
         "figure4 should have degrees 4,4,4,4,4,2");
  expect(fig4.at("components") == 1 &&
             fig4.at("blocks").at("cut_vertices").empty(),
         "figure4 should be a block");
  expect(fig4.at("diameter") == 2, "figure4 diameter should be 2");
  expect(fig4.at("eulerian").at("direct").at("eulerian").get<bool>(),
         "figure4 should be Eulerian");
}

void criterion2() {
  for (int n = 4; n <= 20; n += 2) {
    auto r = run_tool("construct regular --n " + std::to_string(n));
    expect(r.exit_code == 0, "construct regular --n " + std::to_string(n) +
                                 " exited " + std::to_string(r.exit_code));
    expect_time(r, 1.0, "construct regular --n " + std::to_string(n));
    auto j = json::parse(r.output);
    auto g = graph_from_json(j.at("graph"));
    expect(g.order() == n, "family member has the wrong order");
    expect(cdg::is_k_regular(g, n - 2), "family member is not (n-2)-regular");
    expect(cdg::connected_components(g).size() == 1,
           "family member is not connected");
    expect(!cdg::is_complete(g), "family member must not be complete");
    // independent oracle: complement of a perfect matching
    auto co = g.complement();
    expect(cdg::is_k_regular(co, 1) && co.size() == static_cast<std::size_t>(n) / 2,
           "complement is not a perfect matching");
    if (n == 6)
      expect(cdg::are_isomorphic(g, load_fixture_graph("figure3a")),
             "n=6 member should be isomorphic to figure3a");
    if (n == 8)
      expect(cdg::are_isomorphic(g, load_fixture_graph("figure3c")),
             "n=8 member should be isomorphic to figure3c");
  }
}

void criterion3() {
  const std::map<int, int> exact{{6, 1}, {8, 2}, {10, 3}, {12, 5}};
  auto total_start = std::chrono::steady_clock::now();
  for (int n = 6; n <= 24; n += 2) {
    auto r = run_tool("verify-bound --n " + std::to_string(n) + " --json");
    expect(r.exit_code == 0, "verify-bound --n " + std::to_string(n) +
                                 " exited " + std::to_string(r.exit_code));
    auto j = json::parse(r.output);
    expect(j.at("pass").get<bool>(), "verify-bound reported failure");
    int count = j.at("count").get<int>();
    int bound = cdg::lower_bound(n);
    expect(j.at("lower_bound").get<int>() == bound, "reported bound is wrong");
    if (auto it = exact.find(n); it != exact.end())
      expect(count == it->second, "n=" + std::to_string(n) + " catalog size " +
                                      std::to_string(count) + ", expected " +
                                      std::to_string(it->second));
    expect(count >= bound, "catalog size below the bound");
    expect(j.at("members").size() == static_cast<std::size_t>(count),
           "member list size mismatch");

    std::set<std::string> canonicals;
    std::set<std::vector<int>> degree_sets;
    for (const auto& m : j.at("members")) {
      auto g = graph_from_json(m.at("graph"));
      expect(g.order() == n, "member has the wrong order");
      expect(!cdg::is_regular(g), "member must not be regular");
      expect(cdg::is_block(g), "member must be a block");
      expect(cdg::diameter(g) == 2, "member must have diameter 2");
      expect(cdg::is_eulerian_direct(g).eulerian, "member must be Eulerian");
      degree_sets.insert(cdg::degree_sequence(g));
      if (m.contains("canonical")) canonicals.insert(m.at("canonical").get<std::string>());
    }
    if (n <= 12)
      expect(canonicals.size() == static_cast<std::size_t>(count),
             "members are not pairwise non-isomorphic (canonical collision)");
    else
      expect(degree_sets.size() == static_cast<std::size_t>(count),
             "members are not certified pairwise non-isomorphic");
  }
  auto total = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             total_start)
                   .count();
  expect(total < 5.0,
         "verify-bound total " + std::to_string(total) + "s (budget 5s)");
}

void criterion4() {
  auto r1 = run_tool("construct product " + fixture("figure5a") + " " +
                     fixture("figure5b"));
  expect(r1.exit_code == 0, "product of the figure5 pair failed");
  expect_time(r1, 1.0, "construct product figure5a figure5b");
  auto g1 = graph_from_json(json::parse(r1.output).at("graph"));
  expect(cdg::canonical_form(g1) ==
             cdg::canonical_form(load_fixture_graph("figure4")),
         "figure5a x figure5b should be isomorphic to figure4");

  auto r2 = run_tool("construct product " + fixture("figure3a") + " " +
                     fixture("figure3b"));
  expect(r2.exit_code == 0, "product of figure3a and figure3b failed");
  expect_time(r2, 1.0, "construct product figure3a figure3b");
  auto g2 = graph_from_json(json::parse(r2.output).at("graph"));
  expect(cdg::canonical_form(g2) ==
             cdg::canonical_form(load_fixture_graph("figure3c")),
         "figure3a x figure3b should be isomorphic to figure3c");
}

std::string sweep_output;  // shared between criteria 5 and 6

void criterion5() {
  auto r = run_tool("sweep --max-n 7 --json");
  expect(r.exit_code == 0, "sweep exited " + std::to_string(r.exit_code));
  expect_time(r, 60.0, "sweep --max-n 7");
  sweep_output = r.output;
  auto j = json::parse(r.output);
  expect(j.at("pass").get<bool>(), "sweep reported failure");
  expect(j.at("reports").size() == 7, "sweep should cover n = 1..7");
  for (const auto& rep : j.at("reports")) {
    expect(rep.at("violations").empty(),
           "sweep found violations at n=" + rep.at("n").dump() + ": " +
               rep.at("violations").dump());
    expect(rep.at("checks").get<std::uint64_t>() >=
               rep.at("classes").get<std::uint64_t>(),
           "sweep ran fewer checks than classes");
  }
}

void criterion6() {
  expect(!sweep_output.empty(), "criterion 5 must run first");
  auto j = json::parse(sweep_output);
  const std::uint64_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) {
    const auto& rep = j.at("reports").at(static_cast<std::size_t>(n - 1));
    expect(rep.at("n").get<int>() == n, "sweep reports out of order");
    expect(rep.at("classes").get<std::uint64_t>() == expected[n - 1],
           "class count at n=" + std::to_string(n) + " is " +
               rep.at("classes").dump() + ", expected " +
               std::to_string(expected[n - 1]));
    expect(rep.at("classes_match").get<bool>(), "tool flagged a count mismatch");
  }
}

void criterion7() {
  // repeated runs are byte-identical
  const std::string repeats[] = {
      "analyze " + fixture("figure2") + " --json",
      "analyze " + fixture("d3e") + " --json",
      "construct regular --n 12",
      "verify-bound --n 12 --json",
      "enumerate --n 5 --workers 2",
  };
  for (const auto& args : repeats) {
    auto a = run_tool(args);
    auto b = run_tool(args);
    expect(a.exit_code == b.exit_code && a.output == b.output,
           "repeated run differs: " + args);
  }

  // the flagship sweep repeats byte-for-byte as well
  auto sweep_again = run_tool("sweep --max-n 7 --json");
  expect(sweep_again.output == sweep_output, "repeated sweep output differs");

  // parallel enumeration matches single-worker output exactly
  auto serial = run_tool("enumerate --n 6 --workers 1");
  auto parallel = run_tool("enumerate --n 6 --workers 4");
  expect(serial.exit_code == 0 && parallel.exit_code == 0, "enumerate failed");
  expect(serial.output == parallel.output,
         "parallel enumeration differs from single-worker output");

  // manifests of identical runs record identical input/output digests
  std::string m1 = "acceptance-manifest-1.json";
  std::string m2 = "acceptance-manifest-2.json";
  auto r1 = run_tool("--manifest " + m1 + " analyze " + fixture("figure2") +
                     " --json");
  auto r2 = run_tool("--manifest " + m2 + " analyze " + fixture("figure2") +
                     " --json");
  expect(r1.exit_code == 0 && r2.exit_code == 0, "manifest runs failed");
  auto j1 = json::parse(slurp(m1));
  auto j2 = json::parse(slurp(m2));
  std::remove(m1.c_str());
  std::remove(m2.c_str());
  expect(j1.at("inputs") == j2.at("inputs"),
         "manifest input digests differ between identical runs");
  expect(j1.at("outputs") == j2.at("outputs"),
         "manifest output digests differ between identical runs");
  expect(j1.at("outputs").contains("stdout"), "manifest should digest stdout");
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string name;
    std::function<void()> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "figure fidelity", criterion1},
      {2, "regular family", criterion2},
      {3, "catalogue bound", criterion3},
      {4, "direct product identities", criterion4},
      {5, "oracle sweeps", criterion5},
      {6, "isomorphism class counts", criterion6},
      {7, "determinism", criterion7},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    try {
      c.body();
      std::cout << "PASS criterion " << c.number << ": " << c.name << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL criterion " << c.number << ": " << c.name << " -- "
                << e.what() << "\n";
    }
  }
  std::cout << "acceptance: " << (criteria.size() - failures) << "/"
            << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
