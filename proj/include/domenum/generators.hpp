#ifndef DOMENUM_GENERATORS_HPP
#define DOMENUM_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "domenum/clique_tree.hpp"

namespace domenum {

/// Chordal graph grown one vertex at a time: each new vertex picks a random
/// maximal clique and joins a random subset of it, every member kept with
/// probability `density` (at least one member when density > 0).
inline Graph random_chordal(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto coin = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < density; };
  std::vector<std::vector<Vertex>> cliques;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    if (cliques.empty()) {
      cliques.push_back({v});
      continue;
    }
    auto& q = cliques[rng() % cliques.size()];
    std::vector<Vertex> s;
    for (Vertex u : q)
      if (coin()) s.push_back(u);
    if (s.empty() && density > 0) s.push_back(q[rng() % q.size()]);
    for (Vertex u : s) edges.emplace_back(u, v);
    if (s.size() == q.size()) {
      q.push_back(v);
    } else {
      s.push_back(v);
      cliques.push_back(std::move(s));
    }
  }
  return Graph::from_edges(n, edges);
}

/// Split(G): the vertices of G form a clique, a copy x′ of each vertex forms
/// an independent set, and x–y′ is an edge iff x ∈ N[y]. Vertex x keeps id x;
/// x′ gets id n + x.
inline Graph split_double(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) edges.emplace_back(x, y);
    for (Vertex y : closed_neighborhood(g, x)) edges.emplace_back(y, n + x);
  }
  return Graph::from_edges(2 * n, edges);
}

/// CNF formula over variables 1..variables; literal -v is the negation of v.
struct CnfFormula {
  std::size_t variables = 0;
  std::vector<std::vector<int>> clauses;

  /// Throws InputError on an empty clause, an out-of-range literal, or a
  /// clause holding both polarities of one variable. Repeated literals are merged.
  void normalize() {
    for (auto& c : clauses) {
      if (c.empty()) throw InputError("empty clause");
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      for (int lit : c) {
        if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > variables)
          throw InputError("literal " + std::to_string(lit) + " out of range");
        if (std::binary_search(c.begin(), c.end(), -lit)) throw InputError("clause contains both polarities");
      }
    }
  }

  /// Bit i-1 of `assignment` is the value of variable i.
  bool satisfied_by(std::uint64_t assignment) const {
    for (const auto& c : clauses) {
      bool ok = false;
      for (int lit : c) {
        const bool value = (assignment >> (std::abs(lit) - 1)) & 1U;
        if (value == (lit > 0)) ok = true;
      }
      if (!ok) return false;
    }
    return true;
  }

  /// Truth-table scan; at most 20 variables.
  std::vector<std::uint64_t> satisfying_assignments() const {
    if (variables > 20) throw InputError("too many variables for a truth table");
    std::vector<std::uint64_t> out;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << variables); ++a)
      if (satisfied_by(a)) out.push_back(a);
    return out;
  }
};

/// Parses DIMACS CNF: `c` comment lines, a `p cnf <vars> <clauses>` header,
/// then zero-terminated clauses that may span lines.
inline CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false;
  std::size_t declared = 0;
  std::vector<int> current;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c" || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string kind;
      long long vars = -1, count = -1;
      if (header || !(ls >> kind >> vars >> count) || kind != "cnf" || vars < 0 || count < 0)
        throw InputError("line " + std::to_string(line_no) + ": bad DIMACS header");
      header = true;
      f.variables = static_cast<std::size_t>(vars);
      declared = static_cast<std::size_t>(count);
      continue;
    }
    if (!header) throw InputError("line " + std::to_string(line_no) + ": clause before header");
    std::istringstream all(line);
    std::string tok;
    while (all >> tok) {
      int lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw InputError("line " + std::to_string(line_no) + ": bad literal '" + tok + "'");
      }
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (!header) throw InputError("missing DIMACS header");
  if (!current.empty()) f.clauses.push_back(std::move(current));
  if (f.clauses.size() != declared)
    throw InputError("header declares " + std::to_string(declared) + " clauses, found " + std::to_string(f.clauses.size()));
  f.normalize();
  return f;
}

/// The SAT reduction instance: a chordal graph with an explicit clique tree,
/// the forced set S and the forbidden set X.
struct GadgetInstance {
  Graph graph;
  CliqueTree tree;
  /// Clique list and parent indices as passed to build_clique_tree_from_spec.
  std::vector<VertexSet> cliques;
  std::vector<CliqueId> parents;
  VertexSet s_set;
  VertexSet x_set;
  /// Per variable (0-based) the ids of its positive and negative literal
  /// vertices; kNone when the literal occurs in no clause.
  std::vector<Vertex> positive;
  std::vector<Vertex> negative;

  /// Variable values chosen by a solution D: 1 when the positive literal is in
  /// D, 0 for the negative one, -1 when neither is and 2 when both are.
  std::vector<int> read_assignment(const VertexSet& d) const {
    std::vector<int> out(positive.size(), -1);
    for (std::size_t i = 0; i < positive.size(); ++i) {
      if (positive[i] != kNone && d.contains(positive[i])) out[i] = 1;
      if (negative[i] != kNone && d.contains(negative[i])) out[i] = out[i] == 1 ? 2 : 0;
    }
    return out;
  }
};

/// Builds the reduction graph. Ids: clauses c_1..c_m, then p_1..p_n, then
/// p̄_1..p̄_n, then for each variable x_i, y_i, z_i, l_i, q_i, l̄_i, q̄_i, where
/// a literal that occurs in no clause gets neither its l nor its q vertex.
/// Requires at least one clause so that the root clique is maximal.
inline GadgetInstance sat_gadget(CnfFormula f) {
  f.normalize();
  const std::size_t n = f.variables;
  const std::size_t m = f.clauses.size();
  if (m == 0) throw InputError("the reduction needs at least one clause");

  std::vector<std::vector<std::size_t>> pos_clauses(n), neg_clauses(n);
  for (std::size_t j = 0; j < m; ++j)
    for (int lit : f.clauses[j]) (lit > 0 ? pos_clauses : neg_clauses)[std::abs(lit) - 1].push_back(j);

  auto c_id = [](std::size_t j) { return j; };
  auto p_id = [m](std::size_t i) { return m + i; };
  auto pbar_id = [m, n](std::size_t i) { return m + n + i; };
  std::size_t next = m + 2 * n;
  struct Block {
    Vertex x, y, z, l = kNone, q = kNone, lbar = kNone, qbar = kNone;
  };
  std::vector<Block> blocks(n);
  for (std::size_t i = 0; i < n; ++i) {
    blocks[i].x = next++;
    blocks[i].y = next++;
    blocks[i].z = next++;
    if (!pos_clauses[i].empty()) {
      blocks[i].l = next++;
      blocks[i].q = next++;
    }
    if (!neg_clauses[i].empty()) {
      blocks[i].lbar = next++;
      blocks[i].qbar = next++;
    }
  }
  const std::size_t total = next;

  std::vector<std::vector<Vertex>> lists;
  std::vector<CliqueId> parents;
  std::vector<Vertex> root;
  for (std::size_t j = 0; j < m; ++j) root.push_back(c_id(j));
  for (std::size_t i = 0; i < n; ++i) root.push_back(p_id(i));
  for (std::size_t i = 0; i < n; ++i) root.push_back(pbar_id(i));
  lists.push_back(root);
  parents.push_back(kNone);
  for (std::size_t i = 0; i < n; ++i) {
    const Block& b = blocks[i];
    const CliqueId cx = lists.size();
    lists.push_back({b.x, p_id(i), pbar_id(i)});
    parents.push_back(0);
    lists.push_back({b.y, b.x});
    parents.push_back(cx);
    lists.push_back({b.y, b.z});
    parents.push_back(cx + 1);
    if (b.l != kNone) {
      std::vector<Vertex> cl{b.l, p_id(i)};
      for (std::size_t j : pos_clauses[i]) cl.push_back(c_id(j));
      const CliqueId at = lists.size();
      lists.push_back(cl);
      parents.push_back(0);
      lists.push_back({b.q, b.l});
      parents.push_back(at);
    }
    if (b.lbar != kNone) {
      std::vector<Vertex> cl{b.lbar, pbar_id(i)};
      for (std::size_t j : neg_clauses[i]) cl.push_back(c_id(j));
      const CliqueId at = lists.size();
      lists.push_back(cl);
      parents.push_back(0);
      lists.push_back({b.qbar, b.lbar});
      parents.push_back(at);
    }
  }

  std::vector<Edge> edges;
  for (const auto& c : lists)
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b) edges.emplace_back(c[a], c[b]);

  GadgetInstance g;
  g.graph = Graph::from_edges(total, edges);
  for (const auto& c : lists) g.cliques.push_back(VertexSet::from_range(total, c));
  g.parents = parents;
  g.tree = build_clique_tree_from_spec(g.graph, g.cliques, g.parents);
  g.s_set = g.graph.empty_set();
  g.x_set = g.graph.empty_set();
  for (std::size_t j = 0; j < m; ++j) g.x_set.insert(c_id(j));
  for (std::size_t i = 0; i < n; ++i) {
    g.s_set.insert(blocks[i].x);
    g.s_set.insert(blocks[i].y);
    g.x_set.insert(blocks[i].z);
    g.x_set.insert(p_id(i));
    g.x_set.insert(pbar_id(i));
    g.positive.push_back(blocks[i].l);
    g.negative.push_back(blocks[i].lbar);
  }
  std::vector<std::string> labels(total);
  for (std::size_t j = 0; j < m; ++j) labels[c_id(j)] = "c" + std::to_string(j + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string k = std::to_string(i + 1);
    labels[p_id(i)] = "p" + k;
    labels[pbar_id(i)] = "~p" + k;
    labels[blocks[i].x] = "x" + k;
    labels[blocks[i].y] = "y" + k;
    labels[blocks[i].z] = "z" + k;
    if (blocks[i].l != kNone) labels[blocks[i].l] = "l" + k, labels[blocks[i].q] = "q" + k;
    if (blocks[i].lbar != kNone) labels[blocks[i].lbar] = "~l" + k, labels[blocks[i].qbar] = "~q" + k;
  }
  g.graph.set_labels(std::move(labels));
  return g;
}

}  // namespace domenum

#endif  // DOMENUM_GENERATORS_HPP
