#ifndef DOMENUM_TESTS_FIXTURES_HPP
#define DOMENUM_TESTS_FIXTURES_HPP

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "domenum/domenum.hpp"

namespace fixtures {

using namespace domenum;

// E1: a-b, b-c, b-d, d-e with a..e = 0..4.
inline constexpr Vertex a = 0, b = 1, c = 2, d = 3, e = 4;

inline Graph e1() { return Graph::from_edges(5, {{a, b}, {b, c}, {b, d}, {d, e}}); }

// Cliques C1..C4 of the hand-drawn tree, stored at indices 0..3.
inline constexpr CliqueId C1 = 0, C2 = 1, C3 = 2, C4 = 3;

inline std::vector<VertexSet> e1_cliques() {
  return {VertexSet(5, {a, b}), VertexSet(5, {b, c}), VertexSet(5, {b, d}), VertexSet(5, {d, e})};
}
inline std::vector<CliqueId> e1_parents() { return {kNone, C1, C1, C3}; }
inline CliqueTree e1_tree() { return build_clique_tree_from_spec(e1(), e1_cliques(), e1_parents()); }

inline VertexSet set(std::initializer_list<Vertex> members, std::size_t n = 5) { return VertexSet(n, members); }

inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

/// K_{1,k} with centre 0.
inline Graph star(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= k; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(k + 1, edges);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

/// K_m with a pendant vertex m + i attached to each clique vertex i.
inline Graph spiked_clique(std::size_t m) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = i + 1; j < m; ++j) edges.emplace_back(i, j);
    edges.emplace_back(i, m + i);
  }
  return Graph::from_edges(2 * m, edges);
}

inline std::set<VertexSet> as_set(const std::vector<VertexSet>& v) { return {v.begin(), v.end()}; }

inline std::set<VertexSet> enumerated(const Graph& g, const CliqueTree& t) {
  std::set<VertexSet> out;
  enum_minimal_dominating_sets(g, t, [&](const VertexSet& s) { out.insert(s); });
  return out;
}

inline std::set<VertexSet> oracle(const Graph& g) { return as_set(brute_force_minimal_dominating_sets(g)); }

/// Every subset of {0..n-1} as a VertexSet, n small.
inline std::vector<VertexSet> all_subsets(std::size_t n) {
  std::vector<VertexSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    VertexSet s(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((m >> i) & 1U) s.insert(i);
    out.push_back(std::move(s));
  }
  return out;
}

/// Exhaustive test for a feasible (K1,K2)-extension of the partial antichain a.
inline bool has_feasible_extension(const EnumContext& ctx, const VertexSet& a) {
  const Graph& g = ctx.graph();
  const CliqueTree& t = ctx.tree();
  const VertexSet base = a | ctx.k();
  VertexSet free = g.empty_set();
  for (CliqueId cl : l_set(t, base)) free |= t.below(cl);
  free -= base;
  const auto slots = free.to_vector();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
    VertexSet s = base;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((m >> i) & 1U) s.insert(slots[i]);
    if (!is_dominating(g, s)) continue;
    bool ok = true;
    for (Vertex x : s - ctx.k2())
      if (context_private_neighbors(ctx, s, x).empty()) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

/// Every feasible extension of A within the admissible region.
inline std::vector<VertexSet> feasible_extensions(const EnumContext& ctx, const VertexSet& a) {
  const Graph& g = ctx.graph();
  const CliqueTree& t = ctx.tree();
  const VertexSet base = a | ctx.k();
  VertexSet free = g.empty_set();
  for (CliqueId cl : l_set(t, base)) free |= t.below(cl);
  free -= base;
  const auto slots = free.to_vector();
  std::vector<VertexSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
    VertexSet s = base;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((m >> i) & 1U) s.insert(slots[i]);
    if (!is_dominating(g, s)) continue;
    bool ok = true;
    for (Vertex x : s - ctx.k2()) ok = ok && !context_private_neighbors(ctx, s, x).empty();
    if (ok) out.push_back(s);
  }
  return out;
}

/// Random CNF with 1..max_vars variables and 1..max_clauses clauses of up to
/// three distinct variables each.
inline CnfFormula random_cnf(std::mt19937_64& rng, std::size_t max_vars = 4, std::size_t max_clauses = 4) {
  CnfFormula f;
  f.variables = 1 + rng() % max_vars;
  const std::size_t m = 1 + rng() % max_clauses;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<int> clause;
    const std::size_t width = 1 + rng() % std::min<std::size_t>(3, f.variables);
    while (clause.size() < width) {
      const int v = static_cast<int>(1 + rng() % f.variables);
      if (std::find(clause.begin(), clause.end(), v) != clause.end() ||
          std::find(clause.begin(), clause.end(), -v) != clause.end())
        continue;
      clause.push_back(rng() % 2 ? v : -v);
    }
    f.clauses.push_back(std::move(clause));
  }
  f.normalize();
  return f;
}

/// Full assignments read off the minimal dominating sets D of the gadget with
/// S ⊆ D and D ∩ X = ∅. A variable left open by D contributes both values.
/// Sets `conflict` when some D picks both literals of a variable.
inline std::set<std::uint64_t> gadget_assignments(const CnfFormula& f, bool* conflict = nullptr) {
  const GadgetInstance inst = sat_gadget(f);
  std::set<std::uint64_t> out;
  enum_minimal_dominating_sets(inst.graph, inst.tree, [&](const VertexSet& dset) {
    if (!inst.s_set.is_subset_of(dset) || dset.intersects(inst.x_set)) return;
    const auto values = inst.read_assignment(dset);
    std::vector<std::uint64_t> masks{0};
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] == 2 && conflict) *conflict = true;
      std::vector<std::uint64_t> next;
      for (std::uint64_t mask : masks) {
        if (values[i] != 1) next.push_back(mask);
        if (values[i] != 0) next.push_back(mask | (std::uint64_t{1} << i));
      }
      masks = std::move(next);
    }
    out.insert(masks.begin(), masks.end());
  });
  return out;
}

inline std::set<std::uint64_t> truth_table(const CnfFormula& f) {
  const auto v = f.satisfying_assignments();
  return {v.begin(), v.end()};
}

/// Random chordal corpus with a fixed seed schedule.
struct CorpusEntry {
  Graph graph;
  double density;
  std::uint64_t seed;
};

inline std::vector<CorpusEntry> random_corpus(std::size_t count, std::size_t max_n, std::uint64_t salt = 0) {
  std::vector<CorpusEntry> out;
  const double densities[] = {0.2, 0.5, 0.9};
  for (std::size_t i = 0; i < count; ++i) {
    const double dens = densities[i % 3];
    const std::uint64_t seed = 1000 * salt + i;
    out.push_back({random_chordal(1 + (i / 3) % max_n, dens, seed), dens, seed});
  }
  return out;
}

}  // namespace fixtures

#endif  // DOMENUM_TESTS_FIXTURES_HPP
