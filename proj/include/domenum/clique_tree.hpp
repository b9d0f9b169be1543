#ifndef DOMENUM_CLIQUE_TREE_HPP
#define DOMENUM_CLIQUE_TREE_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "domenum/chordal.hpp"
#include "domenum/graph.hpp"

namespace domenum {

/// Rooted clique tree of a chordal graph together with the depth-first
/// numbering the enumeration relies on.
///
/// Children are visited in the order of their sorted vertex lists (so by the
/// smallest contained id first). Inside f(C) vertices are numbered by id.
class CliqueTree {
 public:
  CliqueTree() = default;

  std::size_t clique_count() const { return cliques_.size(); }
  std::size_t vertex_count() const { return home_.size(); }
  bool empty() const { return cliques_.empty(); }

  CliqueId root() const { return root_; }
  const VertexSet& clique(CliqueId c) const { return cliques_[c]; }
  CliqueId parent(CliqueId c) const { return parent_[c]; }
  const std::vector<CliqueId>& children(CliqueId c) const { return children_[c]; }

  /// 0-based preorder number; the subtree of c occupies [preorder(c), subtree_end(c)].
  std::size_t preorder(CliqueId c) const { return pre_[c]; }
  std::size_t subtree_end(CliqueId c) const { return hi_[c]; }
  CliqueId at_preorder(std::size_t i) const { return by_pre_[i]; }
  const std::vector<CliqueId>& cliques_in_preorder() const { return by_pre_; }

  /// f(C): vertices of C absent from its parent (the whole root clique for the root).
  const VertexSet& fset(CliqueId c) const { return fset_[c]; }
  /// C(x): the clique whose f-set holds x.
  CliqueId home(Vertex x) const { return home_[x]; }
  /// Position of x in the vertex numbering induced by the clique preorder.
  std::size_t number(Vertex x) const { return vnum_[x]; }
  Vertex vertex_at(std::size_t number) const { return by_vnum_[number]; }
  const std::vector<Vertex>& vertices_in_order() const { return by_vnum_; }

  /// V(C): vertices homed in the subtree of c.
  const VertexSet& below(CliqueId c) const { return below_[c]; }
  /// V(C) ∪ C: every vertex that occurs in some clique of the subtree of c.
  VertexSet region(CliqueId c) const { return below_[c] | cliques_[c]; }

  bool is_ancestor_or_self(CliqueId anc, CliqueId desc) const {
    return pre_[anc] <= pre_[desc] && pre_[desc] <= hi_[anc];
  }
  bool is_proper_ancestor(CliqueId anc, CliqueId desc) const { return anc != desc && is_ancestor_or_self(anc, desc); }
  bool comparable(CliqueId a, CliqueId b) const { return is_ancestor_or_self(a, b) || is_ancestor_or_self(b, a); }

  /// Tree edges as (parent, child) pairs.
  std::vector<std::pair<CliqueId, CliqueId>> edges() const {
    std::vector<std::pair<CliqueId, CliqueId>> out;
    for (CliqueId c = 0; c < cliques_.size(); ++c)
      if (parent_[c] != kNone) out.emplace_back(parent_[c], c);
    return out;
  }

  /// Assembles a tree from already-validated parts and computes every derived
  /// field. No invariant checking happens here.
  static CliqueTree assemble(std::size_t vertex_count, std::vector<VertexSet> cliques, std::vector<CliqueId> parent) {
    CliqueTree t;
    t.cliques_ = std::move(cliques);
    t.parent_ = std::move(parent);
    const std::size_t k = t.cliques_.size();
    t.children_.assign(k, {});
    t.root_ = kNone;
    for (CliqueId c = 0; c < k; ++c) {
      if (t.parent_[c] == kNone)
        t.root_ = c;
      else
        t.children_[t.parent_[c]].push_back(c);
    }
    for (auto& ch : t.children_)
      std::sort(ch.begin(), ch.end(), [&](CliqueId a, CliqueId b) {
        return std::tie(t.cliques_[a], a) < std::tie(t.cliques_[b], b);
      });

    t.pre_.assign(k, 0);
    t.hi_.assign(k, 0);
    t.by_pre_.clear();
    if (k > 0) {
      std::vector<std::pair<CliqueId, std::size_t>> stack{{t.root_, 0}};
      t.pre_[t.root_] = 0;
      t.by_pre_.push_back(t.root_);
      while (!stack.empty()) {
        auto& [c, next] = stack.back();
        if (next < t.children_[c].size()) {
          CliqueId child = t.children_[c][next++];
          t.pre_[child] = t.by_pre_.size();
          t.by_pre_.push_back(child);
          stack.emplace_back(child, 0);
        } else {
          t.hi_[c] = t.by_pre_.size() - 1;
          stack.pop_back();
        }
      }
    }

    t.home_.assign(vertex_count, kNone);
    t.fset_.assign(k, VertexSet(vertex_count));
    t.by_vnum_.clear();
    for (CliqueId c : t.by_pre_) {
      VertexSet f = t.cliques_[c];
      if (t.parent_[c] != kNone) f -= t.cliques_[t.parent_[c]];
      for (Vertex x : f) {
        t.home_[x] = c;
        t.by_vnum_.push_back(x);
      }
      t.fset_[c] = std::move(f);
    }
    t.vnum_.assign(vertex_count, kNone);
    for (std::size_t i = 0; i < t.by_vnum_.size(); ++i) t.vnum_[t.by_vnum_[i]] = i;

    t.below_.assign(k, VertexSet(vertex_count));
    for (std::size_t i = k; i-- > 0;) {
      CliqueId c = t.by_pre_[i];
      t.below_[c] |= t.fset_[c];
      if (t.parent_[c] != kNone) t.below_[t.parent_[c]] |= t.below_[c];
    }
    return t;
  }

 private:
  std::vector<VertexSet> cliques_;
  std::vector<CliqueId> parent_;
  std::vector<std::vector<CliqueId>> children_;
  CliqueId root_ = kNone;
  std::vector<std::size_t> pre_, hi_;
  std::vector<CliqueId> by_pre_;
  std::vector<VertexSet> fset_;
  std::vector<CliqueId> home_;
  std::vector<std::size_t> vnum_;
  std::vector<Vertex> by_vnum_;
  std::vector<VertexSet> below_;
};

/// Raised by build_clique_tree_from_spec; `invariant` names the first failed check.
class InvalidCliqueTree : public InputError {
 public:
  InvalidCliqueTree(std::string invariant, const std::string& detail)
      : InputError(invariant + ": " + detail), invariant_(std::move(invariant)) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

namespace detail {

/// Maximal cliques of a chordal graph from a perfect elimination ordering,
/// sorted lexicographically.
inline std::vector<VertexSet> maximal_cliques(const Graph& g, const EliminationOrder& peo) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexSet> candidates;
  candidates.reserve(n);
  for (Vertex v : peo.order) {
    VertexSet c(n);
    c.insert(v);
    for (Vertex u : g.neighbors(v))
      if (peo.position[u] > peo.position[v]) c.insert(u);
    candidates.push_back(std::move(c));
  }
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
      if (i == j) continue;
      if (candidates[i].is_subset_of(candidates[j]) &&
          (candidates[i].size() < candidates[j].size() || j < i))
        dominated = true;
    }
    if (!dominated) out.push_back(candidates[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Orients an undirected tree on k nodes from `root`.
inline std::vector<CliqueId> orient(std::size_t k, const std::vector<std::pair<CliqueId, CliqueId>>& edges,
                                    CliqueId root) {
  std::vector<std::vector<CliqueId>> adj(k);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<CliqueId> parent(k, kNone);
  std::vector<bool> seen(k, false);
  std::vector<CliqueId> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    CliqueId c = stack.back();
    stack.pop_back();
    for (CliqueId d : adj[c]) {
      if (seen[d]) continue;
      seen[d] = true;
      parent[d] = c;
      stack.push_back(d);
    }
  }
  return parent;
}

}  // namespace detail

/// Builds the deterministic clique tree of a chordal graph.
///
/// Cliques are indexed in lexicographic order of their vertex lists. Tree edges
/// come from Kruskal's maximum-weight spanning tree over separator sizes with
/// ties broken by index pair; the root is the lexicographically smallest clique
/// containing vertex 0. Throws NotChordalError.
inline CliqueTree build_clique_tree(const Graph& g) {
  auto result = recognize_chordal(g);
  if (!std::holds_alternative<EliminationOrder>(result)) throw NotChordalError();
  auto cliques = detail::maximal_cliques(g, std::get<EliminationOrder>(result));
  const std::size_t k = cliques.size();
  if (k == 0) return CliqueTree::assemble(g.vertex_count(), {}, {});

  std::vector<std::tuple<std::size_t, CliqueId, CliqueId>> candidates;
  for (CliqueId i = 0; i < k; ++i)
    for (CliqueId j = i + 1; j < k; ++j) candidates.emplace_back((cliques[i] & cliques[j]).size(), i, j);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) { return std::get<0>(a) > std::get<0>(b); });
  std::vector<CliqueId> uf(k);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](CliqueId x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::vector<std::pair<CliqueId, CliqueId>> edges;
  for (auto [w, i, j] : candidates) {
    CliqueId a = find(i), b = find(j);
    if (a == b) continue;
    uf[a] = b;
    edges.emplace_back(i, j);
  }
  auto parent = detail::orient(k, edges, 0);
  return CliqueTree::assemble(g.vertex_count(), std::move(cliques), std::move(parent));
}

/// Validates an explicit clique tree against g and computes its numbering.
/// `parent[i]` is the index of clique i's parent, kNone for the root.
inline CliqueTree build_clique_tree_from_spec(const Graph& g, std::vector<VertexSet> cliques,
                                              std::vector<CliqueId> parent) {
  const std::size_t n = g.vertex_count();
  const std::size_t k = cliques.size();
  if (parent.size() != k) throw InvalidCliqueTree("shape", "parent list length differs from clique count");
  if (k == 0) {
    if (n != 0) throw InvalidCliqueTree("maximal-cliques", "no cliques for a non-empty graph");
    return CliqueTree::assemble(0, {}, {});
  }
  std::size_t roots = 0;
  for (CliqueId c = 0; c < k; ++c) {
    if (cliques[c].universe() != n) throw InvalidCliqueTree("shape", "clique " + std::to_string(c) + " has wrong universe");
    if (parent[c] == kNone)
      ++roots;
    else if (parent[c] >= k || parent[c] == c)
      throw InvalidCliqueTree("shape", "bad parent index for clique " + std::to_string(c));
  }
  if (roots != 1) throw InvalidCliqueTree("shape", "expected exactly one root");
  for (CliqueId c = 0; c < k; ++c) {
    CliqueId x = c;
    for (std::size_t steps = 0; x != kNone; ++steps, x = parent[x])
      if (steps > k) throw InvalidCliqueTree("shape", "parent links contain a cycle");
  }

  for (CliqueId c = 0; c < k; ++c) {
    if (cliques[c].empty()) throw InvalidCliqueTree("clique", "clique " + std::to_string(c) + " is empty");
    for (Vertex x : cliques[c]) {
      VertexSet rest = cliques[c];
      rest.erase(x);
      if (!rest.is_subset_of(g.neighbors(x)))
        throw InvalidCliqueTree("clique", "set " + std::to_string(c) + " is not a clique");
    }
    VertexSet common = g.all_vertices() - cliques[c];
    for (Vertex x : cliques[c]) common &= g.neighbors(x);
    if (!common.empty())
      throw InvalidCliqueTree("maximal-cliques", "clique " + std::to_string(c) + " is not maximal");
    for (CliqueId d = 0; d < c; ++d)
      if (cliques[d] == cliques[c]) throw InvalidCliqueTree("maximal-cliques", "duplicate clique");
  }
  for (Vertex x = 0; x < n; ++x) {
    bool covered = false;
    for (const auto& c : cliques) covered = covered || c.contains(x);
    if (!covered) throw InvalidCliqueTree("maximal-cliques", "vertex " + std::to_string(x) + " is in no clique");
    for (Vertex y : g.neighbors(x)) {
      if (y < x) continue;
      bool edge_covered = false;
      for (const auto& c : cliques) edge_covered = edge_covered || (c.contains(x) && c.contains(y));
      if (!edge_covered)
        throw InvalidCliqueTree("maximal-cliques",
                                "edge " + std::to_string(x) + "-" + std::to_string(y) + " lies in no clique");
    }
  }
  // Subtree property: the cliques holding x, minus those whose parent also holds x, must be a single node.
  for (Vertex x = 0; x < n; ++x) {
    std::size_t tops = 0;
    for (CliqueId c = 0; c < k; ++c)
      if (cliques[c].contains(x) && (parent[c] == kNone || !cliques[parent[c]].contains(x))) ++tops;
    if (tops != 1)
      throw InvalidCliqueTree("subtree", "cliques containing vertex " + std::to_string(x) + " are not connected");
  }

  CliqueTree t = CliqueTree::assemble(n, std::move(cliques), std::move(parent));

  VertexSet seen(n);
  for (CliqueId c = 0; c < k; ++c) {
    if (t.fset(c).intersects(seen)) throw InvalidCliqueTree("partition", "f-sets overlap");
    seen |= t.fset(c);
  }
  if (seen.size() != n) throw InvalidCliqueTree("partition", "f-sets do not cover V");
  for (CliqueId c = 0; c < k; ++c) {
    for (Vertex x : g.all_vertices() - t.below(c)) {
      const std::size_t hits = (g.neighbors(x) & t.fset(c)).size();
      if (hits != 0 && hits != t.fset(c).size())
        throw InvalidCliqueTree("property-1.1", "vertex " + std::to_string(x) + " sees part of f(" + std::to_string(c) + ")");
    }
    for (CliqueId d = c + 1; d < k; ++d) {
      if (t.comparable(c, d)) continue;
      for (Vertex x : t.fset(c))
        if (g.neighbors(x).intersects(t.fset(d)))
          throw InvalidCliqueTree("property-1.2", "edge between f-sets of incomparable cliques");
    }
  }
  return t;
}

/// Same tree edges, different root.
inline CliqueTree reroot(const CliqueTree& t, CliqueId new_root) {
  std::vector<VertexSet> cliques;
  for (CliqueId c = 0; c < t.clique_count(); ++c) cliques.push_back(t.clique(c));
  auto parent = detail::orient(t.clique_count(), t.edges(), new_root);
  return CliqueTree::assemble(t.vertex_count(), std::move(cliques), std::move(parent));
}

/// The instance rooted at clique c: G[V(C) ∪ C] with the subtree of c, whose
/// root f-set becomes all of C. Ids are renumbered densely in ascending order.
struct Subproblem {
  InducedSubgraph sub;
  CliqueTree tree;
  std::vector<CliqueId> clique_to_old;

  const Graph& graph() const { return sub.graph; }
};

inline Subproblem subproblem(const CliqueTree& t, const Graph& g, CliqueId c) {
  Subproblem out;
  out.sub = induced_subgraph(g, t.region(c));
  const std::size_t n = out.sub.to_old.size();
  std::vector<CliqueId> to_new(t.clique_count(), kNone);
  std::vector<VertexSet> cliques;
  std::vector<CliqueId> parent;
  for (std::size_t i = t.preorder(c); i <= t.subtree_end(c); ++i) {
    CliqueId old = t.at_preorder(i);
    to_new[old] = cliques.size();
    out.clique_to_old.push_back(old);
    cliques.push_back(out.sub.restrict(t.clique(old)));
    parent.push_back(old == c ? kNone : to_new[t.parent(old)]);
  }
  out.tree = CliqueTree::assemble(n, std::move(cliques), std::move(parent));
  return out;
}

}  // namespace domenum

#endif  // DOMENUM_CLIQUE_TREE_HPP
