#ifndef DOMENUM_CHORDAL_HPP
#define DOMENUM_CHORDAL_HPP

#include <deque>
#include <optional>
#include <variant>
#include <vector>

#include "domenum/graph.hpp"

namespace domenum {

/// Evidence that a graph is not chordal. `cycle` holds a chordless cycle of
/// length >= 4 when one was found cheaply; it may be empty.
struct NotChordal {
  std::vector<Vertex> cycle;
};

/// A perfect elimination ordering: each vertex's later neighbours form a clique.
struct EliminationOrder {
  std::vector<Vertex> order;
  std::vector<std::size_t> position;  // inverse of `order`
};

using ChordalityResult = std::variant<EliminationOrder, NotChordal>;

namespace detail {

/// Maximum-cardinality search visit order; ties go to the smallest id.
inline std::vector<Vertex> maximum_cardinality_search(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> done(n, false);
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = kNone;
    for (Vertex v = 0; v < n; ++v)
      if (!done[v] && (best == kNone || weight[v] > weight[best])) best = v;
    done[best] = true;
    visit.push_back(best);
    for (Vertex u : g.neighbors(best))
      if (!done[u]) ++weight[u];
  }
  return visit;
}

inline std::vector<Vertex> shortest_path_avoiding(const Graph& g, Vertex from, Vertex to, const VertexSet& banned) {
  std::vector<Vertex> prev(g.vertex_count(), kNone);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<Vertex> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (Vertex u : g.neighbors(v)) {
      if (seen[u] || (banned.contains(u) && u != to)) continue;
      seen[u] = true;
      prev[u] = v;
      queue.push_back(u);
    }
  }
  if (!seen[to]) return {};
  std::vector<Vertex> path;
  for (Vertex v = to; v != kNone; v = prev[v]) path.push_back(v);
  return {path.rbegin(), path.rend()};
}

}  // namespace detail

/// Maximum-cardinality search followed by an explicit simplicial check of the
/// reversed visit order.
inline ChordalityResult recognize_chordal(const Graph& g) {
  const std::size_t n = g.vertex_count();
  auto visit = detail::maximum_cardinality_search(g);
  EliminationOrder peo;
  peo.order.assign(visit.rbegin(), visit.rend());
  peo.position.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) peo.position[peo.order[i]] = i;

  for (Vertex v : peo.order) {
    Vertex parent = kNone;
    for (Vertex u : g.neighbors(v))
      if (peo.position[u] > peo.position[v] && (parent == kNone || peo.position[u] < peo.position[parent]))
        parent = u;
    if (parent == kNone) continue;
    for (Vertex u : g.neighbors(v)) {
      if (u == parent || peo.position[u] < peo.position[v] || g.adjacent(u, parent)) continue;
      // v, parent and u give a non-simplicial triple; close it into a chordless cycle.
      VertexSet banned = closed_neighborhood(g, v);
      banned.erase(u);
      banned.erase(parent);
      auto path = detail::shortest_path_avoiding(g, parent, u, banned);
      NotChordal witness;
      if (path.size() >= 3) {
        witness.cycle.push_back(v);
        witness.cycle.insert(witness.cycle.end(), path.begin(), path.end());
      }
      return witness;
    }
  }
  return peo;
}

inline bool is_chordal(const Graph& g) { return std::holds_alternative<EliminationOrder>(recognize_chordal(g)); }

/// Checks that `order` is a perfect elimination ordering of g.
inline bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n) return false;
  std::vector<std::size_t> pos(n, kNone);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != kNone) return false;
    pos[order[i]] = i;
  }
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> later;
    for (Vertex u : g.neighbors(v))
      if (pos[u] > pos[v]) later.push_back(u);
    for (std::size_t i = 0; i < later.size(); ++i)
      for (std::size_t j = i + 1; j < later.size(); ++j)
        if (!g.adjacent(later[i], later[j])) return false;
  }
  return true;
}

}  // namespace domenum

#endif  // DOMENUM_CHORDAL_HPP
