#ifndef DOMENUM_ANTICHAIN_HPP
#define DOMENUM_ANTICHAIN_HPP

#include <vector>

#include "domenum/clique_tree.hpp"
#include "domenum/graph.hpp"

namespace domenum {

using CliqueList = std::vector<CliqueId>;

/// 𝒞(S): home cliques of the members of S, in preorder, without repeats.
inline CliqueList home_cliques(const CliqueTree& t, const VertexSet& s) {
  std::vector<bool> mark(t.clique_count(), false);
  for (Vertex x : s) mark[t.home(x)] = true;
  CliqueList out;
  for (CliqueId c : t.cliques_in_preorder())
    if (mark[c]) out.push_back(c);
  return out;
}

/// Up(S): vertices homed at a proper ancestor of some clique in 𝒞(S).
inline VertexSet up_set(const CliqueTree& t, const VertexSet& s) {
  VertexSet out(t.vertex_count());
  std::vector<bool> done(t.clique_count(), false);
  for (CliqueId c : home_cliques(t, s)) {
    for (CliqueId p = t.parent(c); p != kNone && !done[p]; p = t.parent(p)) {
      done[p] = true;
      out |= t.fset(p);
    }
  }
  return out;
}

inline VertexSet up_set(const CliqueTree& t, Vertex x) {
  VertexSet s(t.vertex_count());
  s.insert(x);
  return up_set(t, s);
}

/// Uncov(S) = Up(S) ∖ N[S].
inline VertexSet uncov(const CliqueTree& t, const Graph& g, const VertexSet& s) {
  return up_set(t, s) - closed_neighborhood(g, s);
}

/// A(S): members of S whose home clique is ⪯-maximal in 𝒞(S).
inline VertexSet top_antichain(const CliqueTree& t, const VertexSet& s) {
  auto homes = home_cliques(t, s);
  VertexSet out(t.vertex_count());
  for (Vertex x : s) {
    bool top = true;
    for (CliqueId c : homes)
      if (t.is_proper_ancestor(c, t.home(x))) {
        top = false;
        break;
      }
    if (top) out.insert(x);
  }
  return out;
}

namespace detail {

/// hit[c] is true when the subtree of c contains a clique of 𝒞(S).
inline std::vector<bool> subtree_hits(const CliqueTree& t, const VertexSet& s) {
  std::vector<bool> hit(t.clique_count(), false);
  for (Vertex x : s)
    for (CliqueId c = t.home(x); c != kNone && !hit[c]; c = t.parent(c)) hit[c] = true;
  return hit;
}

}  // namespace detail

/// ℒ(S): the ⪯-maximal cliques whose subtree avoids 𝒞(S); {root} when S is empty.
inline CliqueList l_set(const CliqueTree& t, const VertexSet& s) {
  if (t.empty()) return {};
  if (s.empty()) return {t.root()};
  auto hit = detail::subtree_hits(t, s);
  CliqueList out;
  for (CliqueId c : t.cliques_in_preorder())
    if (!hit[c] && t.parent(c) != kNone && hit[t.parent(c)]) out.push_back(c);
  return out;
}

/// ℒ′(S): the ⪯-maximal cliques disjoint from S inside the subtrees of ℒ(S).
inline CliqueList l_prime_set(const CliqueTree& t, const VertexSet& s) {
  CliqueList out;
  std::vector<CliqueId> stack;
  for (CliqueId top : l_set(t, s)) {
    stack.push_back(top);
    while (!stack.empty()) {
      CliqueId c = stack.back();
      stack.pop_back();
      if (!t.clique(c).intersects(s)) {
        out.push_back(c);
        continue;
      }
      const auto& ch = t.children(c);
      for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
  }
  std::sort(out.begin(), out.end(), [&](CliqueId a, CliqueId b) { return t.preorder(a) < t.preorder(b); });
  return out;
}

enum class AntichainRule {
  /// Vertices dominated by A ∪ K are exempt from the coverage condition.
  kAmended,
  /// Coverage demanded of every vertex outside Up(A), as originally stated.
  kLiteral,
};

namespace detail {

inline void require_in_root(const CliqueTree& t, const VertexSet& k) {
  if (!k.empty() && (t.empty() || !k.is_subset_of(t.clique(t.root()))))
    throw ContractViolation("K must lie inside the root clique");
}

inline bool pairwise_incomparable(const CliqueTree& t, const VertexSet& a) {
  for (Vertex x : a)
    for (Vertex y : a)
      if (t.is_proper_ancestor(t.home(x), t.home(y))) return false;
  return true;
}

/// Vertices z that violate the coverage condition for A.
inline VertexSet uncovered_obligations(const CliqueTree& t, const Graph& g, const VertexSet& k, const VertexSet& a,
                                       AntichainRule rule) {
  VertexSet bad = g.all_vertices() - up_set(t, a);
  if (rule == AntichainRule::kAmended) bad -= closed_neighborhood(g, a | k);
  VertexSet out(g.vertex_count());
  for (Vertex z : bad) {
    if (t.clique(t.home(z)).intersects(a)) continue;
    bool covered = false;
    for (Vertex x : a)
      if (t.is_proper_ancestor(t.home(x), t.home(z))) {
        covered = true;
        break;
      }
    if (!covered) out.insert(z);
  }
  return out;
}

}  // namespace detail

/// A is an antichain relative to K: pairwise incomparable homes, and every
/// vertex outside Up(A) (and, under the amended rule, outside N[A ∪ K]) meets
/// A in its home clique or above.
inline bool is_antichain(const CliqueTree& t, const Graph& g, const VertexSet& k, const VertexSet& a,
                         AntichainRule rule = AntichainRule::kAmended) {
  detail::require_in_root(t, k);
  return detail::pairwise_incomparable(t, a) && detail::uncovered_obligations(t, g, k, a, rule).empty();
}

/// tail(A): the member with the largest vertex number, kNone for the empty set.
inline Vertex tail(const CliqueTree& t, const VertexSet& a) {
  Vertex best = kNone;
  for (Vertex x : a)
    if (best == kNone || t.number(x) > t.number(best)) best = x;
  return best;
}

/// A is a prefix of some antichain, i.e. later vertices can still complete it.
/// An unmet obligation z can only be repaired by a vertex homed at C(z) or
/// below it, so it is fatal once C(z) precedes the home of tail(A).
inline bool is_partial_antichain(const CliqueTree& t, const Graph& g, const VertexSet& k, const VertexSet& a,
                                 AntichainRule rule = AntichainRule::kAmended) {
  detail::require_in_root(t, k);
  if (a.empty()) return true;
  if (!detail::pairwise_incomparable(t, a)) return false;
  const std::size_t last = t.preorder(t.home(tail(t, a)));
  for (Vertex z : detail::uncovered_obligations(t, g, k, a, rule))
    if (t.preorder(t.home(z)) < last) return false;
  return true;
}

}  // namespace domenum

#endif  // DOMENUM_ANTICHAIN_HPP
