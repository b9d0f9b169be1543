#ifndef DOMENUM_GRAPH_HPP
#define DOMENUM_GRAPH_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "domenum/errors.hpp"
#include "domenum/vertex_set.hpp"

namespace domenum {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on the dense ids 0..n-1.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges collapse; self-loops and
  /// out-of-range endpoints throw InputError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.adj_.assign(n, VertexSet(n));
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n)
        throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
      if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
      g.adj_[u].insert(v);
      g.adj_[v].insert(u);
    }
    g.edge_count_ = 0;
    for (const auto& row : g.adj_) g.edge_count_ += row.size();
    g.edge_count_ /= 2;
    return g;
  }
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const VertexSet& neighbors(Vertex x) const {
    check(x);
    return adj_[x];
  }
  bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < adj_.size(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Optional display names; empty when none were attached.
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != adj_.size()) throw InputError("label count mismatch");
    labels_ = std::move(labels);
  }

  VertexSet empty_set() const { return VertexSet(adj_.size()); }
  VertexSet all_vertices() const { return VertexSet::full(adj_.size()); }

  void check(Vertex x) const {
    if (x >= adj_.size()) throw InputError("invalid vertex id " + std::to_string(x));
  }

 private:
  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
};

inline VertexSet closed_neighborhood(const Graph& g, Vertex x) {
  VertexSet s = g.neighbors(x);
  s.insert(x);
  return s;
}

/// N[S].
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = s;
  for (Vertex x : s) out |= g.neighbors(x);
  return out;
}

inline bool is_dominating(const Graph& g, const VertexSet& d) {
  return closed_neighborhood(g, d).size() == g.vertex_count();
}

/// P(D,x): the vertices y with N[y] ∩ D = {x}. Requires x ∈ D.
inline VertexSet private_neighbors(const Graph& g, const VertexSet& d, Vertex x) {
  if (!d.contains(x)) throw ContractViolation("private_neighbors: vertex not in the set");
  VertexSet out = g.empty_set();
  VertexSet others = d;
  others.erase(x);
  for (Vertex y : closed_neighborhood(g, x)) {
    if (!g.neighbors(y).intersects(others) && !others.contains(y)) out.insert(y);
  }
  return out;
}

inline bool is_irredundant(const Graph& g, const VertexSet& d) {
  return std::all_of(d.begin(), d.end(), [&](Vertex x) { return !private_neighbors(g, d, x).empty(); });
}

inline bool is_minimal_dominating(const Graph& g, const VertexSet& d) {
  return is_dominating(g, d) && is_irredundant(g, d);
}

namespace detail {

inline bool dominates_within(const Graph& g, const VertexSet& d, const VertexSet& target) {
  for (Vertex w : target) {
    if (!d.contains(w) && !g.neighbors(w).intersects(d)) return false;
  }
  return true;
}

}  // namespace detail

/// Greedy minimal dominating set of G[within]: start from `within` and drop, in
/// `order`, every vertex whose removal keeps G[within] dominated. Removability
/// only shrinks as the set shrinks, so one pass realises the "remove the
/// smallest removable vertex until minimal" rule.
inline VertexSet greedy_minimal_dominating_set(const Graph& g, const VertexSet& within,
                                               std::span<const Vertex> order) {
  VertexSet d = within;
  for (Vertex x : order) {
    if (!d.contains(x)) continue;
    d.erase(x);
    if (!detail::dominates_within(g, d, within)) d.insert(x);
  }
  return d;
}

/// Greedy minimal dominating set of the whole graph; `order` must be a permutation of V.
inline VertexSet greedy_minimal_dominating_set(const Graph& g, std::span<const Vertex> order) {
  std::vector<bool> seen(g.vertex_count(), false);
  if (order.size() != g.vertex_count()) throw InputError("greedy order is not a permutation");
  for (Vertex v : order) {
    if (v >= g.vertex_count() || seen[v]) throw InputError("greedy order is not a permutation");
    seen[v] = true;
  }
  return greedy_minimal_dominating_set(g, g.all_vertices(), order);
}

inline constexpr std::size_t kBruteForceLimit = 20;

/// Every minimal dominating set, by exhaustive subset scan. Output is sorted by
/// size and then lexicographically. Throws InputError above kBruteForceLimit vertices.
inline std::vector<VertexSet> brute_force_minimal_dominating_sets(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kBruteForceLimit) throw InputError("brute-force oracle limited to 20 vertices");
  std::vector<std::uint32_t> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = 1U << v;
    for (Vertex u : g.neighbors(v)) closed[v] |= 1U << u;
  }
  const std::uint32_t all = n == 32 ? ~0U : ((1U << n) - 1);
  auto dominated_by = [&](std::uint32_t mask) {
    std::uint32_t cover = 0;
    for (std::uint32_t m = mask; m != 0; m &= m - 1) cover |= closed[static_cast<std::size_t>(std::countr_zero(m))];
    return cover;
  };
  std::vector<std::uint32_t> found;
  for (std::uint64_t mask = 0; mask <= all; ++mask) {
    const auto m = static_cast<std::uint32_t>(mask);
    if (dominated_by(m) != all) continue;
    bool minimal = true;
    for (std::uint32_t rest = m; rest != 0 && minimal; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      if (dominated_by(m & ~bit) == all) minimal = false;
    }
    if (minimal) found.push_back(m);
  }
  std::vector<VertexSet> out;
  out.reserve(found.size());
  for (std::uint32_t m : found) {
    VertexSet s(n);
    for (std::uint32_t r = m; r != 0; r &= r - 1) s.insert(static_cast<Vertex>(std::countr_zero(r)));
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_new;  // kNone for vertices outside the subset
  std::vector<Vertex> to_old;

  VertexSet lift(const VertexSet& s) const {
    VertexSet out(to_new.size());
    for (Vertex v : s) out.insert(to_old[v]);
    return out;
  }
  VertexSet restrict(const VertexSet& s) const {
    VertexSet out(to_old.size());
    for (Vertex v : s)
      if (to_new[v] != kNone) out.insert(to_new[v]);
    return out;
  }
};

/// G[X] with ids renumbered densely in ascending original order.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x) {
  InducedSubgraph sub;
  sub.to_new.assign(g.vertex_count(), kNone);
  for (Vertex v : x) {
    sub.to_new[v] = sub.to_old.size();
    sub.to_old.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : x)
    for (Vertex u : g.neighbors(v))
      if (v < u && x.contains(u)) edges.emplace_back(sub.to_new[v], sub.to_new[u]);
  sub.graph = Graph::from_edges(sub.to_old.size(), edges);
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (Vertex v : sub.to_old) labels.push_back(g.labels()[v]);
    sub.graph.set_labels(std::move(labels));
  }
  return sub;
}

}  // namespace domenum

#endif  // DOMENUM_GRAPH_HPP
