#ifndef DOMENUM_EXTENSION_HPP
#define DOMENUM_EXTENSION_HPP

#include <optional>
#include <unordered_map>
#include <vector>

#include "domenum/antichain.hpp"

namespace domenum {

/// D_C(x): the canonical fill of V(C) used to certify safety.
struct PrivateWitness {
  CliqueId clique = kNone;
  /// kNone when x lies outside the clique.
  Vertex anchor = kNone;
  VertexSet z_part;
  VertexSet greedy_part;

  VertexSet set() const { return z_part | greedy_part; }
};

/// One (sub)problem: a graph, its clique tree and the root-clique vertices
/// already fixed in the solution. Members of k2 already own a private
/// neighbour elsewhere; members of k1 still need one. `blocked` holds root
/// vertices dominated from outside the subproblem, which therefore cannot act
/// as private neighbours here.
class EnumContext {
 public:
  EnumContext(const Graph& g, const CliqueTree& t)
      : EnumContext(g, t, g.empty_set(), g.empty_set(), g.empty_set()) {}

  EnumContext(const Graph& g, const CliqueTree& t, VertexSet k1, VertexSet k2, VertexSet blocked)
      : graph_(&g), tree_(&t), k1_(std::move(k1)), k2_(std::move(k2)), blocked_(std::move(blocked)) {
    if (k1_.intersects(k2_)) throw ContractViolation("K1 and K2 must be disjoint");
    if (!k1_.empty() || !k2_.empty() || !blocked_.empty()) {
      if (t.empty()) throw ContractViolation("K given for an empty tree");
      const VertexSet& root = t.clique(t.root());
      if (!(k1_ | k2_ | blocked_).is_subset_of(root)) throw ContractViolation("K must lie inside the root clique");
    }
  }

  const Graph& graph() const { return *graph_; }
  const CliqueTree& tree() const { return *tree_; }
  const VertexSet& k1() const { return k1_; }
  const VertexSet& k2() const { return k2_; }
  VertexSet k() const { return k1_ | k2_; }
  const VertexSet& blocked() const { return blocked_; }

  /// Memoised D_C(x); see private_witness().
  const PrivateWitness& witness(CliqueId c, Vertex x) const;

 private:
  const Graph* graph_;
  const CliqueTree* tree_;
  VertexSet k1_, k2_, blocked_;
  mutable std::unordered_map<std::size_t, PrivateWitness> witnesses_;
};

/// P(S, x) with blocked vertices removed.
inline VertexSet context_private_neighbors(const EnumContext& ctx, const VertexSet& s, Vertex x) {
  const Graph& g = ctx.graph();
  VertexSet out(g.vertex_count());
  for (Vertex y : closed_neighborhood(g, x) - ctx.blocked()) {
    VertexSet hits = closed_neighborhood(g, y) & s;
    if (hits.size() == 1 && hits.contains(x)) out.insert(y);
  }
  return out;
}

/// ℱ(C, x): cliques of ℒ′({x}) lying in the subtree of C.
inline CliqueList f_cliques(const EnumContext& ctx, CliqueId c, Vertex x) {
  const CliqueTree& t = ctx.tree();
  VertexSet s(t.vertex_count());
  s.insert(x);
  CliqueList out;
  for (CliqueId d : l_prime_set(t, s))
    if (t.is_ancestor_or_self(c, d)) out.push_back(d);
  return out;
}

/// Computes D_C(x) without the cache. For x ∈ C it is Z (the smallest id of
/// each f(C′), C′ ∈ ℱ(C,x)) plus the greedy minimal dominating set of
/// G[(V(C) ∖ N[x]) ∖ N[Z]]; otherwise the greedy minimal dominating set of G[V(C)].
inline PrivateWitness private_witness(const EnumContext& ctx, CliqueId c, Vertex x) {
  const Graph& g = ctx.graph();
  const CliqueTree& t = ctx.tree();
  PrivateWitness w;
  w.clique = c;
  w.z_part = g.empty_set();
  VertexSet rest = t.below(c);
  if (t.clique(c).contains(x)) {
    w.anchor = x;
    for (CliqueId d : f_cliques(ctx, c, x)) w.z_part.insert(t.fset(d).front());
    rest -= closed_neighborhood(g, x);
    rest -= closed_neighborhood(g, w.z_part);
  }
  w.greedy_part = greedy_minimal_dominating_set(g, rest, t.vertices_in_order());
  return w;
}

inline const PrivateWitness& EnumContext::witness(CliqueId c, Vertex x) const {
  const std::size_t key = c * graph_->vertex_count() + x;
  auto it = witnesses_.find(key);
  if (it == witnesses_.end()) it = witnesses_.emplace(key, private_witness(*this, c, x)).first;
  return it->second;
}

namespace detail {

/// (S1) and (S2) for a private y of some vertex, against S = D ∪ K.
inline bool safety_conditions(const EnumContext& ctx, const VertexSet& s, Vertex y) {
  const Graph& g = ctx.graph();
  const CliqueTree& t = ctx.tree();
  const CliqueList lp = l_prime_set(t, s);
  for (CliqueId c : lp) {
    if (!t.clique(c).contains(y)) continue;
    VertexSet need = g.neighbors(y) & t.below(c);
    if (!need.is_subset_of(closed_neighborhood(g, ctx.witness(c, y).set()))) return false;
  }
  // A clique C that misses y can always host a dominator of any z ∈ C: a
  // vertex of f(C) sees all of C and nothing of N[y]. The greedy D_C(y) need
  // not pick one, so it is not consulted in that case.
  for (Vertex z : closed_neighborhood(g, y) & uncov(t, g, s)) {
    bool ok = false;
    for (CliqueId c : lp) {
      const bool hit = t.clique(c).contains(y) ? closed_neighborhood(g, ctx.witness(c, y).set()).contains(z)
                                               : t.clique(c).contains(z);
      if (hit) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

/// y is a safe private neighbour of x for the partial solution D (D excludes K).
inline bool is_safe_private(const EnumContext& ctx, const VertexSet& d, Vertex x, Vertex y) {
  const VertexSet s = d | ctx.k();
  if (!s.contains(x) || ctx.k2().contains(x)) throw ContractViolation("x must belong to D or K1");
  if (!context_private_neighbors(ctx, s, x).contains(y)) throw ContractViolation("y is not a private neighbour of x");
  if (x == y) return true;
  return detail::safety_conditions(ctx, s, y);
}

enum class SafeScan {
  /// Only y = x and privates homed under C(x) are examined.
  kLowerOnly,
  /// Every private neighbour is examined.
  kFull,
};

/// Some private neighbour of x (with respect to D ∪ K) is safe.
inline bool is_safe_vertex(const EnumContext& ctx, const VertexSet& d, Vertex x, SafeScan scan = SafeScan::kLowerOnly) {
  const VertexSet s = d | ctx.k();
  if (!s.contains(x)) throw ContractViolation("x must belong to D or K1");
  VertexSet privates = context_private_neighbors(ctx, s, x);
  if (privates.contains(x)) return true;
  if (scan == SafeScan::kLowerOnly) privates &= ctx.tree().below(ctx.tree().home(x));
  for (Vertex y : privates)
    if (detail::safety_conditions(ctx, s, y)) return true;
  return false;
}

/// A partial antichain has a feasible extension: Uncov(A ∪ K) lies inside the
/// cliques of ℒ′(A ∪ K), and every vertex of A ∪ K1 is safe.
inline bool is_extendable(const EnumContext& ctx, const VertexSet& a, SafeScan scan = SafeScan::kLowerOnly) {
  const CliqueTree& t = ctx.tree();
  const VertexSet s = a | ctx.k();
  VertexSet reach(t.vertex_count());
  for (CliqueId c : l_prime_set(t, s)) reach |= t.clique(c);
  if (!uncov(t, ctx.graph(), s).is_subset_of(reach)) return false;
  for (Vertex x : a | ctx.k1())
    if (!is_safe_vertex(ctx, a, x, scan)) return false;
  return true;
}

/// C_*(D): the first clique of 𝒞(A), in preorder, whose V(C) is not dominated by D.
inline std::optional<CliqueId> c_star_low(const EnumContext& ctx, const VertexSet& a, const VertexSet& d) {
  const VertexSet dominated = closed_neighborhood(ctx.graph(), d | ctx.k());
  for (CliqueId c : home_cliques(ctx.tree(), a))
    if (!ctx.tree().below(c).is_subset_of(dominated)) return c;
  return std::nullopt;
}

/// C^*(D): the last clique of 𝒞(A), in preorder, whose V(C) meets D ∖ (A ∪ K).
inline std::optional<CliqueId> c_star_high(const EnumContext& ctx, const VertexSet& a, const VertexSet& d) {
  const VertexSet extra = d - a - ctx.k();
  std::optional<CliqueId> out;
  for (CliqueId c : home_cliques(ctx.tree(), a))
    if (ctx.tree().below(c).intersects(extra)) out = c;
  return out;
}

/// Q_D(C′): members of (A ∪ K) ∩ C′ outside K2 that must find their private
/// neighbour inside V(C′) ∪ C′. A vertex is released when it already has a
/// private neighbour outside the regions V(C) ∪ C of C′ and the later cliques
/// of 𝒞(A), or when some later region that it belongs to offers it a safe one.
inline VertexSet q_set(const EnumContext& ctx, const VertexSet& a, const VertexSet& d, CliqueId cp) {
  const CliqueTree& t = ctx.tree();
  const VertexSet s = d | ctx.k();
  const auto regions = home_cliques(t, a);
  VertexSet pending(t.vertex_count());
  std::vector<CliqueId> later;
  for (CliqueId c : regions) {
    if (t.preorder(c) >= t.preorder(cp)) pending |= t.region(c);
    if (t.preorder(c) > t.preorder(cp)) later.push_back(c);
  }
  VertexSet out(t.vertex_count());
  for (Vertex x : (a | ctx.k()) & t.clique(cp)) {
    if (ctx.k2().contains(x)) continue;
    const VertexSet privates = context_private_neighbors(ctx, s, x);
    if (!privates.is_subset_of(pending)) continue;
    bool released = false;
    for (CliqueId c : later) {
      if (!t.clique(c).contains(x)) continue;
      for (Vertex y : privates & t.region(c))
        if (y == x || detail::safety_conditions(ctx, s, y)) {
          released = true;
          break;
        }
      if (released) break;
    }
    if (!released) out.insert(x);
  }
  return out;
}

}  // namespace domenum

#endif  // DOMENUM_EXTENSION_HPP
