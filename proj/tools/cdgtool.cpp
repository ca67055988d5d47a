#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "cdg/algos.hpp"
#include "cdg/conditions.hpp"
#include "cdg/construct.hpp"
#include "cdg/enumerate.hpp"
#include "cdg/error.hpp"
#include "cdg/eulerian.hpp"
#include "cdg/graph.hpp"
#include "cdg/json.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

std::string fnv1a_digest(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << "fnv1a:" << std::hex << h;
  return out.str();
}

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Buffers standard output and records digests of every input and output so
/// a manifest, when requested, covers the exact bytes produced.
struct RunContext {
  std::string command_line;
  std::string manifest_path;
  std::string stdout_buf;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> outputs;

  void print(const std::string& text) { stdout_buf += text; }

  std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw cdg::Error(cdg::ErrorCode::MalformedInput, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    inputs.emplace_back(path, fnv1a_digest(text));
    return text;
  }

  void write_output(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
      throw cdg::Error(cdg::ErrorCode::MalformedInput, "cannot write " + path);
    out << content;
    outputs.emplace_back(path, fnv1a_digest(content));
  }

  void finish() {
    std::cout << stdout_buf << std::flush;
    if (manifest_path.empty()) return;
    if (!stdout_buf.empty())
      outputs.emplace_back("stdout", fnv1a_digest(stdout_buf));
    cdg::ojson m;
    m["tool"] = "cdgtool";
    m["version"] = kVersion;
    m["timestamp"] = iso_timestamp();
    m["command_line"] = command_line;
    cdg::ojson in = cdg::ojson::object();
    for (const auto& [path, digest] : inputs) in[path] = digest;
    m["inputs"] = std::move(in);
    cdg::ojson out = cdg::ojson::object();
    for (const auto& [path, digest] : outputs) out[path] = digest;
    m["outputs"] = std::move(out);
    std::ofstream f(manifest_path, std::ios::trunc);
    if (!f) {
      std::cerr << "error: cannot write manifest " << manifest_path << "\n";
      return;
    }
    f << m.dump(2) << "\n";
  }
};

std::string pretty(const cdg::ojson& j) { return j.dump(2) + "\n"; }
std::string compact(const cdg::ojson& j) { return j.dump() + "\n"; }

cdg::LabeledGraph load_graph(RunContext& ctx, const std::string& path,
                             bool no_prime_check,
                             cdg::GraphDocument* doc_out = nullptr) {
  auto text = ctx.slurp(path);
  auto doc = cdg::GraphDocument::from_json(text);
  std::vector<std::string> warnings;
  cdg::ParseOptions options{.require_primes = !no_prime_check};
  auto g = cdg::LabeledGraph::from_document(doc, options, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << path << ": " << w << "\n";
  if (doc_out) *doc_out = std::move(doc);
  return g;
}

std::string label_set(const std::vector<cdg::Prime>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(labels[i]);
  }
  return out + "}";
}

std::string int_list(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(values[i]);
  }
  return out;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string input;
  bool json = false;
  std::string out;
  std::string dot;
  std::string mode = "bipartite";
  bool all_partitions = false;
  bool no_prime_check = false;
};

int cmd_analyze(RunContext& ctx, const AnalyzeArgs& args) {
  cdg::GraphDocument doc;
  auto g = load_graph(ctx, args.input, args.no_prime_check, &doc);
  auto mode = cdg::t32_mode_from_string(args.mode);

  auto report = cdg::necessary_pipeline(g);
  auto blocks = cdg::block_decomposition(g);
  auto diam = cdg::diameter(g);
  auto degrees = cdg::degree_sequence(g);
  auto components = cdg::connected_components(g);
  auto record = cdg::crosscheck(g, mode);
  std::string canonical;
  if (g.order() <= cdg::kCanonicalDefaultMax) canonical = cdg::canonical_form(g);

  cdg::ojson j;
  j["input"] = args.input;
  j["graph"] = cdg::json_of(g);
  if (!doc.metadata.empty()) j["metadata"] = doc.metadata;
  j["order"] = g.order();
  j["size"] = g.size();
  j["degree_sequence"] = degrees;
  j["components"] = components.size();
  j["diameter"] = diam ? cdg::ojson(*diam) : cdg::ojson(nullptr);
  j["canonical"] = canonical.empty() ? cdg::ojson(nullptr) : cdg::ojson(canonical);
  j["blocks"] = cdg::json_of(blocks);
  j["pipeline"] = cdg::json_of(report);
  j["eulerian"] = cdg::json_of(record);

  if (diam && *diam == 3) {
    try {
      auto partition = cdg::lewis_partition(g);
      cdg::ojson lj = cdg::json_of(partition);
      try {
        auto cut = cdg::cut_vertex_by_partition(partition, g);
        lj["predicted_cut_vertex"] = cut ? cdg::ojson(*cut) : cdg::ojson(nullptr);
      } catch (const cdg::Error& e) {
        lj["predicted_cut_vertex_error"] = e.what();
      }
      j["lewis"] = std::move(lj);
    } catch (const cdg::Error& e) {
      j["lewis"] = nullptr;
      j["lewis_error"] = e.what();
    }
    if (args.all_partitions) {
      std::vector<std::string> rejected;
      auto partitions = cdg::all_lewis_partitions(g, &rejected);
      cdg::ojson pj = cdg::ojson::array();
      for (const auto& p : partitions) pj.push_back(cdg::json_of(p));
      j["partitions"] = std::move(pj);
      j["rejected_bases"] = rejected;
    }
  }

  if (!args.dot.empty()) ctx.write_output(args.dot, cdg::to_dot(g));
  if (!args.out.empty()) ctx.write_output(args.out, pretty(j));
  if (args.json) {
    ctx.print(pretty(j));
  } else {
    std::ostringstream out;
    out << "graph: " << g.order() << " vertices, " << g.size() << " edges\n";
    out << "degree sequence: " << int_list(degrees) << "\n";
    out << "components: " << components.size() << "\n";
    out << "diameter: " << (diam ? std::to_string(*diam) : "disconnected") << "\n";
    if (!canonical.empty()) out << "canonical: " << canonical << "\n";
    out << "blocks:";
    for (const auto& b : blocks.blocks) out << " " << label_set(b);
    out << "\n";
    out << "cut vertices: "
        << (blocks.cut_vertices.empty() ? "(none)" : label_set(blocks.cut_vertices))
        << "\n";
    out << "bridges:";
    if (blocks.bridges.empty()) out << " (none)";
    for (const auto& [a, b] : blocks.bridges) out << " " << a << "-" << b;
    out << "\n";
    out << "pipeline: " << (report.overall ? "PASS" : "FAIL") << "\n";
    for (const auto& c : report.conditions) {
      out << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL");
      if (!c.witness.empty()) out << " (" << c.witness << ")";
      out << "\n";
    }
    out << "eulerian: " << (record.direct.eulerian ? "yes" : "no") << " ("
        << record.direct.reason << ")\n";
    out << "route: " << record.route << " [" << cdg::to_string(record.mode)
        << "]\n";
    if (!record.agree) out << "DISAGREEMENT: " << record.note << "\n";
    if (diam && *diam == 3 && j.contains("lewis") && !j["lewis"].is_null()) {
      const auto& lj = j["lewis"];
      out << "lewis partition: r=" << lj["r"].get<cdg::Prime>()
          << " s=" << lj["s"].get<cdg::Prime>() << "\n";
    }
    ctx.print(out.str());
  }
  return report.overall ? 0 : 1;
}

// -------------------------------------------------------------- construct

void emit_constructed(RunContext& ctx, const cdg::LabeledGraph& g,
                      const cdg::ConstructionRecipe& recipe,
                      const std::string& out, const std::string& dot) {
  cdg::ojson j;
  j["graph"] = cdg::json_of(g);
  j["degree_sequence"] = cdg::degree_sequence(g);
  j["recipe"] = cdg::json_of(recipe);
  if (!dot.empty()) ctx.write_output(dot, cdg::to_dot(g));
  if (!out.empty())
    ctx.write_output(out, pretty(j));
  else
    ctx.print(pretty(j));
}

cdg::ojson catalog_json(int n) {
  int bound = cdg::lower_bound(n);
  cdg::PrimePool pool;
  auto members = cdg::eulerian_catalog(n, pool);
  cdg::ojson j;
  j["n"] = n;
  j["lower_bound"] = bound;
  j["count"] = members.size();
  j["pass"] = members.size() >= static_cast<std::size_t>(bound);
  cdg::ojson mj = cdg::ojson::array();
  for (const auto& m : members) {
    cdg::ojson one = cdg::json_of(m);
    if (n <= cdg::kCanonicalDefaultMax)
      one["canonical"] = cdg::canonical_form(m.graph);
    mj.push_back(std::move(one));
  }
  j["members"] = std::move(mj);
  return j;
}

// -------------------------------------------------------------- enumerate

int cmd_enumerate(RunContext& ctx, int n, std::vector<std::string> filters,
                  int workers, const std::string& checkpoint, bool allow_n8,
                  const std::string& mode_str, const std::string& out,
                  const std::string& summary_path) {
  if (n == 8 && !allow_n8)
    throw cdg::Error(cdg::ErrorCode::BadN,
                     "n=8 enumerates 2^28 labeled graphs; pass --allow-n8 to "
                     "opt in");
  cdg::EnumOptions options;
  options.filters = std::move(filters);
  options.workers = workers;
  options.checkpoint_path = checkpoint;
  options.mode = cdg::t32_mode_from_string(mode_str);
  options.progress = n >= 8;
  auto summary = cdg::enumerate_graphs(n, options);

  std::string lines;
  for (const auto& entry : summary.entries) {
    cdg::ojson ej;
    ej["record"] = "class";
    ej.update(cdg::json_of(entry));
    lines += compact(ej);
  }
  cdg::ojson sj;
  sj["record"] = "summary";
  sj.update(cdg::json_of(summary));

  if (!out.empty())
    ctx.write_output(out, lines);
  else
    ctx.print(lines);
  if (!summary_path.empty()) ctx.write_output(summary_path, pretty(sj));
  ctx.print(compact(sj));
  return 0;
}

int cmd_sweep(RunContext& ctx, int max_n, int workers,
              const std::string& mode_str, bool json) {
  auto mode = cdg::t32_mode_from_string(mode_str);
  bool all_pass = true;
  cdg::ojson reports = cdg::ojson::array();
  std::ostringstream text;
  for (int n = 1; n <= max_n; ++n) {
    auto report = cdg::sweep_validate(n, mode, workers);
    bool pass = report.violations.empty();
    std::uint64_t expected = cdg::kKnownClassCounts[n - 1];
    bool counts_ok = report.classes == expected;
    all_pass = all_pass && pass && counts_ok;
    cdg::ojson rj = cdg::json_of(report);
    rj["expected_classes"] = expected;
    rj["classes_match"] = counts_ok;
    reports.push_back(std::move(rj));
    text << "n=" << n << ": " << report.classes << " classes (expected "
         << expected << "), " << report.checks << " checks, "
         << report.violations.size() << " violations\n";
    for (const auto& v : report.violations) text << "  violation: " << v << "\n";
  }
  if (json) {
    cdg::ojson j;
    j["max_n"] = max_n;
    j["mode"] = cdg::to_string(mode);
    j["pass"] = all_pass;
    j["reports"] = std::move(reports);
    ctx.print(pretty(j));
  } else {
    text << (all_pass ? "sweep: PASS" : "sweep: FAIL") << "\n";
    ctx.print(text.str());
  }
  return all_pass ? 0 : 1;
}

int cmd_verify_bound(RunContext& ctx, int n, bool json, const std::string& out) {
  auto j = catalog_json(n);
  bool pass = j["pass"].get<bool>();
  if (!out.empty()) ctx.write_output(out, pretty(j));
  if (json) {
    ctx.print(pretty(j));
  } else {
    std::ostringstream text;
    text << "verify-bound n=" << n << ": " << j["count"].get<std::size_t>()
         << " members, bound " << j["lower_bound"].get<int>() << ": "
         << (pass ? "PASS" : "FAIL") << "\n";
    for (const auto& m : j["members"]) {
      text << "  [" << m["stream"].get<std::string>() << "] degrees";
      for (const auto& d : m["degree_sequence"]) text << " " << d.get<int>();
      text << "\n";
    }
    ctx.print(text.str());
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::ostringstream cmdline;
  for (int i = 0; i < argc; ++i) {
    if (i) cmdline << ' ';
    cmdline << argv[i];
  }
  RunContext ctx;
  ctx.command_line = cmdline.str();

  CLI::App app{"Character degree graph toolkit: analysis, construction, "
               "enumeration, and verification of candidate prime graphs of "
               "finite solvable groups"};
  app.set_version_flag("--version", std::string("cdgtool ") + kVersion);
  app.require_subcommand(1);
  app.add_option("--manifest", ctx.manifest_path,
                 "Write a run manifest (command line, digests) to this path");

  unsigned hw = std::thread::hardware_concurrency();
  int default_workers = hw == 0 ? 1 : static_cast<int>(hw);

  // analyze
  AnalyzeArgs an;
  auto* analyze = app.add_subcommand(
      "analyze", "Analyze a graph: pipeline, blocks, Euler classification");
  analyze->add_option("input", an.input, "Graph JSON file")->required();
  analyze->add_flag("--json", an.json, "Print the JSON report to stdout");
  analyze->add_option("--out", an.out, "Write the JSON report to a file");
  analyze->add_option("--dot", an.dot, "Write a DOT rendering to a file");
  analyze->add_option("--mode", an.mode,
                      "Diameter-three cross-cut mode: bipartite | strict")
      ->default_val("bipartite");
  analyze->add_flag("--all-partitions", an.all_partitions,
                    "Emit every valid diametral partition");
  analyze->add_flag("--no-prime-check", an.no_prime_check,
                    "Accept arbitrary positive integer labels");

  // construct
  auto* construct =
      app.add_subcommand("construct", "Build graphs from the constructive families");
  construct->require_subcommand(1);
  std::string c_out, c_dot;
  construct->add_option("--out", c_out, "Write the result JSON to a file");
  construct->add_option("--dot", c_dot, "Write a DOT rendering to a file");

  int reg_n = 0;
  auto* c_regular = construct->add_subcommand(
      "regular", "The (n-2)-regular family member on n vertices");
  c_regular->add_option("--n", reg_n, "Even vertex count, at least 4")->required();

  std::string prod_a, prod_b;
  bool prod_npc = false;
  auto* c_product = construct->add_subcommand(
      "product", "Direct product (join) of two vertex-disjoint graphs");
  c_product->add_option("a", prod_a, "First factor (Graph JSON)")->required();
  c_product->add_option("b", prod_b, "Second factor (Graph JSON)")->required();
  c_product->add_flag("--no-prime-check", prod_npc,
                      "Accept arbitrary positive integer labels");

  std::string opd_in;
  bool opd_npc = false;
  auto* c_opd = construct->add_subcommand(
      "opd", "Operation D: join with two fresh non-adjacent primes");
  c_opd->add_option("--in", opd_in, "Input graph (Graph JSON)")->required();
  c_opd->add_flag("--no-prime-check", opd_npc,
                  "Accept arbitrary positive integer labels");

  cdg::Prime tc_p = 0;
  std::vector<cdg::Prime> tc_q;
  auto* c_two = construct->add_subcommand(
      "two-component", "Isolated odd prime next to a complete graph");
  c_two->add_option("--p", tc_p, "The isolated odd prime")->required();
  c_two->add_option("--q", tc_q, "Primes of the complete part (comma separated)")
      ->required()
      ->delimiter(',');

  int cat_n = 0;
  auto* c_catalog = construct->add_subcommand(
      "catalog", "The verified Eulerian catalogue on n vertices");
  c_catalog->add_option("--n", cat_n, "Even vertex count, at least 6")->required();

  // enumerate
  int en_n = 0, en_workers = default_workers;
  std::vector<std::string> en_filters;
  std::string en_checkpoint, en_out, en_summary, en_mode = "bipartite";
  bool en_allow8 = false;
  auto* enumerate = app.add_subcommand(
      "enumerate", "All isomorphism classes on n vertices, with filters");
  enumerate->add_option("--n", en_n, "Vertex count, 1..8")->required();
  enumerate->add_option("--filter", en_filters,
                        "Conjunction of predicates (comma separated)")
      ->delimiter(',');
  enumerate->add_option("--workers", en_workers, "Worker threads")
      ->default_val(default_workers);
  enumerate->add_option("--checkpoint", en_checkpoint,
                        "Checkpoint file for restart-safe runs");
  enumerate->add_flag("--allow-n8", en_allow8, "Opt in to the n=8 space (2^28)");
  enumerate->add_option("--mode", en_mode,
                        "Diameter-three cross-cut mode: bipartite | strict")
      ->default_val("bipartite");
  enumerate->add_option("--out", en_out, "Write the JSONL catalog to a file");
  enumerate->add_option("--summary", en_summary, "Write the summary JSON to a file");

  // sweep
  int sw_max = 7, sw_workers = default_workers;
  std::string sw_mode = "bipartite";
  bool sw_json = false;
  auto* sweep = app.add_subcommand(
      "sweep", "Exhaustive validation of the theorem-level properties");
  sweep->add_option("--max-n", sw_max, "Validate all n up to this bound (1..7)")
      ->default_val(7);
  sweep->add_option("--workers", sw_workers, "Worker threads")
      ->default_val(default_workers);
  sweep->add_option("--mode", sw_mode,
                    "Diameter-three cross-cut mode: bipartite | strict")
      ->default_val("bipartite");
  sweep->add_flag("--json", sw_json, "Print the JSON report to stdout");

  // verify-bound
  int vb_n = 0;
  bool vb_json = false;
  std::string vb_out;
  auto* verify = app.add_subcommand(
      "verify-bound", "Check the Eulerian catalogue against its lower bound");
  verify->add_option("--n", vb_n, "Even vertex count, at least 6")->required();
  verify->add_flag("--json", vb_json, "Print the JSON report to stdout");
  verify->add_option("--out", vb_out, "Write the JSON report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  int code = 0;
  try {
    if (analyze->parsed()) {
      code = cmd_analyze(ctx, an);
    } else if (construct->parsed()) {
      if (c_regular->parsed()) {
        cdg::PrimePool pool;
        auto built = cdg::regular_family(reg_n, pool);
        emit_constructed(ctx, built.graph, built.recipe, c_out, c_dot);
      } else if (c_product->parsed()) {
        auto a = load_graph(ctx, prod_a, prod_npc);
        auto b = load_graph(ctx, prod_b, prod_npc);
        auto g = cdg::direct_product(a, b);
        cdg::ConstructionRecipe recipe{
            "direct-product",
            {},
            {cdg::input_recipe(prod_a), cdg::input_recipe(prod_b)}};
        emit_constructed(ctx, g, recipe, c_out, c_dot);
      } else if (c_opd->parsed()) {
        auto g = load_graph(ctx, opd_in, opd_npc);
        cdg::PrimePool pool;
        auto built = cdg::operation_d(g, pool, cdg::input_recipe(opd_in));
        emit_constructed(ctx, built.graph, built.recipe, c_out, c_dot);
      } else if (c_two->parsed()) {
        auto g = cdg::two_component_graph(tc_p, tc_q);
        std::string qs;
        for (std::size_t i = 0; i < tc_q.size(); ++i) {
          if (i) qs += ',';
          qs += std::to_string(tc_q[i]);
        }
        cdg::ConstructionRecipe recipe{
            "two-component", {{"p", std::to_string(tc_p)}, {"qs", qs}}, {}};
        emit_constructed(ctx, g, recipe, c_out, c_dot);
      } else if (c_catalog->parsed()) {
        auto j = catalog_json(cat_n);
        if (!c_out.empty())
          ctx.write_output(c_out, pretty(j));
        else
          ctx.print(pretty(j));
        code = j["pass"].get<bool>() ? 0 : 1;
      }
    } else if (enumerate->parsed()) {
      code = cmd_enumerate(ctx, en_n, en_filters, en_workers, en_checkpoint,
                           en_allow8, en_mode, en_out, en_summary);
    } else if (sweep->parsed()) {
      if (sw_max < 1 || sw_max > 7)
        throw cdg::Error(cdg::ErrorCode::BadN,
                         "--max-n must be between 1 and 7, got " +
                             std::to_string(sw_max));
      code = cmd_sweep(ctx, sw_max, sw_workers, sw_mode, sw_json);
    } else if (verify->parsed()) {
      code = cmd_verify_bound(ctx, vb_n, vb_json, vb_out);
    }
  } catch (const cdg::Error& e) {
    ctx.finish();
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    ctx.finish();
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  ctx.finish();
  return code;
}
