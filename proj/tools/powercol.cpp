// powercol: exact density, orientation, coloring-number and graph-power
// toolkit. Every subcommand emits a machine-readable report with --json;
// rationals are printed as "p/q" strings, never floats.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "powercol/bounds.hpp"
#include "powercol/corpus.hpp"
#include "powercol/density.hpp"
#include "powercol/errors.hpp"
#include "powercol/families.hpp"
#include "powercol/graph.hpp"
#include "powercol/oracles.hpp"
#include "powercol/power.hpp"
#include "powercol/report.hpp"
#include "powercol/square.hpp"
#include "powercol/suites.hpp"
#include "powercol/wcol.hpp"

namespace {

using nlohmann::ordered_json;
using namespace powercol;

constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

Depth parse_depth(const std::string& text) {
  if (text == "inf" || text == "infinity") return Depth::infinite();
  int k = std::stoi(text);
  return Depth::finite(k);
}

void emit(const RunReport& report, bool json) {
  if (json) {
    std::cout << report.to_json().dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : report.result.items()) {
    if (value.is_string())
      std::cout << key << " = " << value.get<std::string>() << '\n';
    else
      std::cout << key << " = " << value.dump() << '\n';
  }
  for (const auto& check : report.checks) {
    std::cout << (check.pass ? "PASS " : "FAIL ") << check.check;
    if (!check.pass) std::cout << "  " << check.details.dump();
    std::cout << '\n';
  }
}

struct Args {
  std::string file;
  std::string out;
  std::string param;
  std::string k_text = "1";
  int p = 1;
  int n = 0;
  long long m = 0;
  int delta = 3;
  int height = 0;
  int rows = 2, cols = 2;
  int k_int = 2;
  int c = 2;
  int p_min = 1, p_max = 8;
  uint64_t seed = 0;
  bool json = false;
  std::string corpus_name = "small";
  std::string family;
  std::string suite;
  std::string oracle_name;
  std::string bounds_kind;
  std::string variant = "tw";
  int t = 1, genus = 0, s = 1, arb = 1, q = 1;
  std::optional<int> verify_delta;
  std::optional<int> verify_p;
  std::string audit;
  std::string order_file;
};

int cmd_compute(const Args& args) {
  Graph g = load_graph(args.file);
  RunReport report;
  report.command = "compute";
  report.input = "file:" + args.file;
  report.params["param"] = args.param;

  if (args.param == "mad") {
    auto [mad, witness] = max_average_degree(g);
    report.result["mad"] = mad.str();
    report.result["witness"] = witness.members();
  } else if (args.param == "col") {
    auto col = coloring_number(g);
    report.result["col"] = col.value;
    report.result["witness"] = col.witness.rank_list();
  } else if (args.param == "wcol") {
    Depth k = parse_depth(args.k_text);
    report.params["k"] = k.str();
    auto exact = wcol_exact(g, k);
    report.result["wcol"] = exact.value;
    report.result["witness"] = exact.witness.rank_list();
  } else if (args.param == "power") {
    report.params["p"] = args.p;
    Graph power = graph_power(g, args.p);
    if (!args.out.empty()) {
      std::ofstream out(args.out);
      out << serialize_graph(power);
      report.result["written"] = args.out;
    }
    report.result["n"] = power.vertex_count();
    report.result["m"] = power.edge_count();
    if (args.out.empty() && !args.json) {
      std::cout << serialize_graph(power);
      return 0;
    }
  } else if (args.param == "orient") {
    Orientation orient = min_outdegree_orientation(g);
    report.result["max_outdegree"] = orient.max_out_degree();
    report.result["orientation"] = orient.to_json()["arcs"];
  } else if (args.param == "weak-orient") {
    WeakOrientation weak = min_weak_orientation(g);
    report.result["max_out_weight"] = weak.max_out_weight().str();
    report.result["weights"] = weak.to_json();
  } else {
    throw CLI::ValidationError("--param must be one of col|wcol|mad|power|orient|weak-orient");
  }
  emit(report, args.json);
  return 0;
}

int cmd_verify(const Args& args) {
  SuiteOptions options;
  options.corpus_kind = corpus_kind_from_name(args.corpus_name);
  if (!args.file.empty()) {
    options.graph = load_graph(args.file);
    options.graph_label = args.file;
  }
  options.audit_path = args.audit;
  if (!args.audit.empty() && args.file.empty())
    throw CLI::ValidationError("--audit needs a single graph file");
  if (!args.order_file.empty()) {
    if (args.file.empty()) throw CLI::ValidationError("--order needs a single graph file");
    std::ifstream in(args.order_file);
    if (!in) throw std::invalid_argument("cannot open " + args.order_file);
    nlohmann::json ranks = nlohmann::json::parse(in);
    options.collection_priority = Ordering::from_rank_list(ranks.get<std::vector<int>>());
  }
  if (args.suite == "lb-tree" || args.suite == "all") {
    options.lb_delta = args.verify_delta;
    options.lb_p = args.verify_p;
    if (options.lb_delta.has_value() != options.lb_p.has_value())
      throw CLI::ValidationError("lb-tree needs both --delta and --p (or neither)");
  } else if (args.verify_p) {
    options.power_exponents = {*args.verify_p};
  }

  RunReport report;
  report.command = "verify";
  report.input = args.file.empty() ? "corpus:" + args.corpus_name : "file:" + args.file;
  report.params["suite"] = args.suite;
  report.checks = run_suite(args.suite, options);
  emit(report, args.json);
  return report.all_pass() ? 0 : kExitChecksFailed;
}

int cmd_generate(const Args& args) {
  FamilyInstance inst;
  if (args.family == "path")
    inst = path_graph(args.n);
  else if (args.family == "cycle")
    inst = cycle_graph(args.n);
  else if (args.family == "complete")
    inst = complete_graph(args.n);
  else if (args.family == "grid")
    inst = grid_graph(args.rows, args.cols);
  else if (args.family == "tree")
    inst = complete_ary_tree(args.delta, args.height);
  else if (args.family == "ktree")
    inst = random_k_tree(args.k_int, args.n, args.seed);
  else if (args.family == "random")
    inst = random_graph(args.n, args.m, args.seed);
  else
    throw CLI::ValidationError("unknown family: " + args.family);

  if (args.out.empty()) throw CLI::ValidationError("generate requires -o FILE");
  {
    std::ofstream out(args.out);
    if (!out) throw std::invalid_argument("cannot write " + args.out);
    out << serialize_graph(inst.graph);
  }
  {
    std::ofstream sidecar(args.out + ".json");
    sidecar << inst.sidecar().dump(2) << '\n';
  }

  RunReport report;
  report.command = "generate";
  report.input = "params";
  report.params = inst.sidecar();
  report.result["written"] = args.out;
  report.result["sidecar"] = args.out + ".json";
  emit(report, args.json);
  return 0;
}

int cmd_bounds(const Args& args) {
  RunReport report;
  report.command = "bounds";
  report.input = "params";
  report.params["kind"] = args.bounds_kind;

  auto values = ordered_json::array();
  if (args.bounds_kind == "wcol") {
    WcolBoundVariant variant;
    if (args.variant == "tw")
      variant = WcolBoundVariant::TreeWidth;
    else if (args.variant == "minor")
      variant = WcolBoundVariant::KtMinorFree;
    else if (args.variant == "genus")
      variant = WcolBoundVariant::Genus;
    else if (args.variant == "planar")
      variant = WcolBoundVariant::Planar;
    else if (args.variant == "join")
      variant = WcolBoundVariant::CompleteJoin;
    else
      throw CLI::ValidationError("--variant must be tw|minor|genus|planar|join");
    WcolBoundParams params{.t = args.t, .genus = args.genus, .s = args.s};
    long long value = wcol_bound(variant, params, args.k_int);
    report.result["value"] = value;
  } else if (args.bounds_kind == "power") {
    for (const auto& b : power_bounds(args.delta, args.p, {.arb = args.arb, .q = args.q}))
      values.push_back(b.to_json());
    report.result["bounds"] = values;
  } else if (args.bounds_kind == "square") {
    for (const auto& b : square_bounds(args.k_int, args.delta, args.c))
      values.push_back(b.to_json());
    report.result["bounds"] = values;
  } else if (args.bounds_kind == "ratio") {
    for (const auto& row : ratio_table(args.delta, args.p_min, args.p_max))
      values.push_back(row.to_json());
    report.result["rows"] = values;
  } else {
    throw CLI::ValidationError("bounds kind must be wcol|power|square|ratio");
  }
  emit(report, args.json);
  return 0;
}

int cmd_oracle(const Args& args) {
  Graph g = load_graph(args.file);
  RunReport report;
  report.command = "oracle";
  report.input = "file:" + args.file;
  report.params["oracle"] = args.oracle_name;

  if (args.oracle_name == "mad")
    report.result["mad"] = mad_oracle(g).str();
  else if (args.oracle_name == "arb")
    report.result["arb"] = arboricity_oracle(g);
  else if (args.oracle_name == "td")
    report.result["td"] = treedepth_oracle(g);
  else if (args.oracle_name == "chi")
    report.result["chi"] = chromatic_oracle(g);
  else if (args.oracle_name == "wcol") {
    Depth k = parse_depth(args.k_text);
    report.params["k"] = k.str();
    report.result["wcol"] = wcol_exhaustive_oracle(g, k);
  } else if (args.oracle_name == "orient")
    report.result["min_max_outdegree"] = min_outdegree_oracle(g);
  else
    throw CLI::ValidationError("oracle must be mad|arb|td|chi|wcol|orient");
  emit(report, args.json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for coloring numbers, densities and graph powers"};
  app.require_subcommand(1);
  Args args;

  auto* compute = app.add_subcommand("compute", "compute one parameter of a graph");
  compute->add_option("--param", args.param, "col|wcol|mad|power|orient|weak-orient")->required();
  compute->add_option("--k", args.k_text, "radius for wcol (integer or 'inf')");
  compute->add_option("--p", args.p, "power exponent");
  compute->add_option("-o,--out", args.out, "output file for power");
  compute->add_flag("--json", args.json, "emit a JSON report");
  compute->add_option("file", args.file, "graph file")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", args.suite, "prop12|prop13|thm11|thm24|thm38|lb-tree|all")
      ->required();
  verify->add_option("file", args.file, "graph file (default: generated corpus)");
  verify->add_option("--corpus", args.corpus_name, "small|medium");
  verify->add_option("--delta", args.verify_delta, "lb-tree: max degree");
  verify->add_option("--p", args.verify_p, "lb-tree power exponent / thm24 single exponent");
  verify->add_option("--audit", args.audit,
                     "write certificate/trace JSON lines (single graph runs)");
  verify->add_option("--order", args.order_file,
                     "collection priority for thm38 (JSON array of vertex ids)");
  verify->add_flag("--json", args.json, "emit a JSON report");

  auto* generate = app.add_subcommand("generate", "generate a family instance");
  generate->add_option("family", args.family, "path|cycle|complete|grid|tree|ktree|random")
      ->required();
  generate->add_option("--n", args.n, "vertex count");
  generate->add_option("--m", args.m, "edge count (random)");
  generate->add_option("--rows", args.rows, "grid rows");
  generate->add_option("--cols", args.cols, "grid cols");
  generate->add_option("--delta", args.delta, "tree: max degree");
  generate->add_option("--height", args.height, "tree: height");
  generate->add_option("--k", args.k_int, "ktree: clique size");
  generate->add_option("--seed", args.seed, "random seed");
  generate->add_option("-o,--out", args.out, "output edge-list file")->required();
  generate->add_flag("--json", args.json, "emit a JSON report");

  auto* bounds = app.add_subcommand("bounds", "evaluate closed-form bounds");
  bounds->add_option("kind", args.bounds_kind, "wcol|power|square|ratio")->required();
  bounds->add_option("--variant", args.variant, "wcol: tw|minor|genus|planar|join");
  bounds->add_option("--k", args.k_int, "radius / density parameter");
  bounds->add_option("--t", args.t, "tree-width or join part");
  bounds->add_option("--genus", args.genus, "genus");
  bounds->add_option("--s", args.s, "join part size");
  bounds->add_option("--delta", args.delta, "max degree");
  bounds->add_option("--p", args.p, "power exponent");
  bounds->add_option("--arb", args.arb, "arboricity");
  bounds->add_option("--q", args.q, "wcol value for the weak-orientation formula");
  bounds->add_option("--c", args.c, "list-bound parameter");
  bounds->add_option("--p-min", args.p_min, "ratio table start");
  bounds->add_option("--p-max", args.p_max, "ratio table end");
  bounds->add_flag("--json", args.json, "emit a JSON report");

  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth (small graphs)");
  oracle->add_option("oracle", args.oracle_name, "mad|arb|td|chi|wcol|orient")->required();
  oracle->add_option("file", args.file, "graph file")->required();
  oracle->add_option("--k", args.k_text, "radius for wcol (integer or 'inf')");
  oracle->add_flag("--json", args.json, "emit a JSON report");

  auto started = std::chrono::steady_clock::now();
  int status = 0;
  try {
    app.parse(argc, argv);
    if (compute->parsed()) status = cmd_compute(args);
    else if (verify->parsed()) status = cmd_verify(args);
    else if (generate->parsed()) status = cmd_generate(args);
    else if (bounds->parsed()) status = cmd_bounds(args);
    else if (oracle->parsed()) status = cmd_oracle(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const LimitError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitLimit;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return kExitChecksFailed;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  // Timing goes to stderr so stdout reports stay byte-identical across runs.
  std::cerr << "elapsed: " << elapsed.count() << " ms\n";
  return status;
}
