// mdsenum: command-line front end for minimal dominating set enumeration.

#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "domenum/domenum.hpp"

namespace {

using namespace domenum;

enum Exit : int { kOk = 0, kNotChordal = 2, kParse = 3, kMismatch = 4 };

struct Input {
  std::string graph_path;
  std::string tree_path;
};

struct Loaded {
  Graph graph;
  CliqueTree tree;
};

Loaded load(const Input& in) {
  Loaded out;
  out.graph = parse_graph(read_file(in.graph_path));
  if (!is_chordal(out.graph)) throw NotChordalError();
  out.tree = in.tree_path.empty() ? build_clique_tree(out.graph) : parse_clique_tree(read_file(in.tree_path), out.graph);
  return out;
}

void print_set(const VertexSet& d, bool ndjson) {
  if (ndjson) {
    std::cout << nlohmann::json{{"d", d.to_vector()}}.dump() << '\n';
  } else {
    bool first = true;
    for (Vertex v : d) {
      std::cout << (first ? "" : " ") << v;
      first = false;
    }
    std::cout << '\n';
  }
  std::cout.flush();
}

int run_enumerate(const Input& in, std::size_t limit, const std::string& format) {
  auto [g, t] = load(in);
  EnumOptions opts;
  opts.limit = limit;
  const bool ndjson = format == "ndjson";
  enum_minimal_dominating_sets(g, t, [&](const VertexSet& d) { print_set(d, ndjson); }, opts);
  return kOk;
}

int run_count(const Input& in) {
  auto [g, t] = load(in);
  std::size_t count = 0;
  enum_minimal_dominating_sets(g, t, [&](const VertexSet&) { ++count; });
  std::cout << count << '\n';
  return kOk;
}

int run_check(const Input& in) {
  auto [g, t] = load(in);
  if (g.vertex_count() > kBruteForceLimit)
    throw InputError("check needs at most " + std::to_string(kBruteForceLimit) + " vertices");
  auto oracle = brute_force_minimal_dominating_sets(g);
  std::set<VertexSet> want(oracle.begin(), oracle.end());
  std::set<VertexSet> got;
  std::optional<VertexSet> bad;
  std::string reason;
  enum_minimal_dominating_sets(g, t, [&](const VertexSet& d) {
    if (bad) return;
    if (!got.insert(d).second) {
      bad = d;
      reason = "emitted twice";
    } else if (!want.count(d)) {
      bad = d;
      reason = "not a minimal dominating set";
    }
  });
  if (!bad) {
    for (const auto& d : want)
      if (!got.count(d)) {
        bad = d;
        reason = "missing";
        break;
      }
  }
  if (!bad) {
    std::cout << "OK " << want.size() << '\n';
    return kOk;
  }
  std::cout << "MISMATCH " << reason << ": " << *bad << '\n';
  return kMismatch;
}

int run_bench(const Input& in, std::size_t limit) {
  auto g = parse_graph(read_file(in.graph_path));
  if (!is_chordal(g)) throw NotChordalError();
  EnumOptions opts;
  opts.limit = limit;
  auto p = profile_delays(g, opts);
  nlohmann::json j{{"outputs", p.outputs},
                   {"max_gap_ns", p.max_gap_ns()},
                   {"median_gap_ns", p.median_gap_ns()},
                   {"p95_gap_ns", p.p95_gap_ns()},
                   {"pre_gap_ns", p.pre_gap_ns()},
                   {"post_gap_ns", p.post_gap_ns()}};
  std::cout << j.dump() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate the minimal dominating sets of a chordal graph"};
  app.require_subcommand(1);

  Input in;
  std::size_t limit = 0;
  std::string format = "lines";

  auto* enumerate = app.add_subcommand("enumerate", "Print every minimal dominating set, one per line");
  enumerate->add_option("graph", in.graph_path, "Graph file ('n m' then 'u v' lines)")->required()->check(CLI::ExistingFile);
  enumerate->add_option("--tree", in.tree_path, "Explicit clique tree file")->check(CLI::ExistingFile);
  enumerate->add_option("--limit", limit, "Stop after this many sets")->check(CLI::PositiveNumber);
  enumerate->add_option("--format", format, "Output format")->check(CLI::IsMember({"lines", "ndjson"}));

  auto* count = app.add_subcommand("count", "Print the number of minimal dominating sets");
  count->add_option("graph", in.graph_path, "Graph file")->required()->check(CLI::ExistingFile);
  count->add_option("--tree", in.tree_path, "Explicit clique tree file")->check(CLI::ExistingFile);

  auto* check = app.add_subcommand("check", "Compare the enumeration with exhaustive search (at most 20 vertices)");
  check->add_option("graph", in.graph_path, "Graph file")->required()->check(CLI::ExistingFile);
  check->add_option("--tree", in.tree_path, "Explicit clique tree file")->check(CLI::ExistingFile);

  auto* bench = app.add_subcommand("bench", "Report output delays as JSON");
  bench->add_option("graph", in.graph_path, "Graph file")->required()->check(CLI::ExistingFile);
  bench->add_option("--limit", limit, "Stop after this many sets")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Write generated instances");
  gen->require_subcommand(1);
  std::string out_path;
  std::size_t n = 10;
  double density = 0.5;
  std::uint64_t seed = 1;
  auto* gen_chordal = gen->add_subcommand("chordal", "Random chordal graph");
  gen_chordal->add_option("-n,--vertices", n, "Vertex count");
  gen_chordal->add_option("-d,--density", density, "Attachment density in [0,1]")->check(CLI::Range(0.0, 1.0));
  gen_chordal->add_option("-s,--seed", seed, "Random seed");
  gen_chordal->add_option("-o,--out", out_path, "Output graph file (stdout when omitted)");
  std::string source_path;
  auto* gen_split = gen->add_subcommand("split", "Split graph of an input graph");
  gen_split->add_option("graph", source_path, "Source graph file")->required()->check(CLI::ExistingFile);
  gen_split->add_option("-o,--out", out_path, "Output graph file (stdout when omitted)");
  auto* gen_sat = gen->add_subcommand("sat", "SAT reduction instance from a DIMACS CNF file");
  gen_sat->add_option("cnf", source_path, "DIMACS CNF file")->required()->check(CLI::ExistingFile);
  gen_sat->add_option("-o,--out", out_path, "Output prefix: writes <prefix>.graph and <prefix>.tree")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) return run_enumerate(in, limit, format);
    if (*count) return run_count(in);
    if (*check) return run_check(in);
    if (*bench) return run_bench(in, limit);
    auto emit = [&](const std::string& text) {
      if (out_path.empty())
        std::cout << text;
      else
        write_file(out_path, text);
    };
    if (*gen_chordal) emit(format_graph(random_chordal(n, density, seed)));
    if (*gen_split) emit(format_graph(split_double(parse_graph(read_file(source_path)))));
    if (*gen_sat) {
      auto inst = sat_gadget(parse_dimacs(read_file(source_path)));
      write_file(out_path + ".graph", format_graph(inst.graph));
      write_file(out_path + ".tree", format_clique_tree(inst.tree));
      nlohmann::json meta{{"S", inst.s_set.to_vector()}, {"X", inst.x_set.to_vector()}, {"labels", inst.graph.labels()}};
      std::cout << meta.dump() << '\n';
    }
    return kOk;
  } catch (const NotChordalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNotChordal;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
}
