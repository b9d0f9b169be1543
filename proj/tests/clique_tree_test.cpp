#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace fixtures;

namespace {

std::set<CliqueId> ids(const CliqueList& v) { return {v.begin(), v.end()}; }

/// Naive Up(S): direct scan over vertex pairs.
VertexSet naive_up(const CliqueTree& t, const VertexSet& s) {
  VertexSet out(t.vertex_count());
  for (Vertex x = 0; x < t.vertex_count(); ++x)
    for (Vertex y : s)
      if (t.is_proper_ancestor(t.home(x), t.home(y))) out.insert(x);
  return out;
}

bool has_descendant_in(const CliqueTree& t, CliqueId c, const std::set<CliqueId>& homes) {
  for (CliqueId h : homes)
    if (t.is_ancestor_or_self(c, h)) return true;
  return false;
}

std::set<CliqueId> naive_l(const CliqueTree& t, const VertexSet& s) {
  if (s.empty()) return {t.root()};
  std::set<CliqueId> homes;
  for (Vertex x : s) homes.insert(t.home(x));
  std::set<CliqueId> cand;
  for (CliqueId c = 0; c < t.clique_count(); ++c)
    if (!has_descendant_in(t, c, homes)) cand.insert(c);
  std::set<CliqueId> out;
  for (CliqueId c : cand) {
    bool maximal = true;
    for (CliqueId o : cand)
      if (t.is_proper_ancestor(o, c)) maximal = false;
    if (maximal) out.insert(c);
  }
  return out;
}

std::set<CliqueId> naive_l_prime(const CliqueTree& t, const VertexSet& s) {
  std::set<CliqueId> cand;
  for (CliqueId top : naive_l(t, s))
    for (CliqueId c = 0; c < t.clique_count(); ++c)
      if (t.is_ancestor_or_self(top, c) && !t.clique(c).intersects(s)) cand.insert(c);
  std::set<CliqueId> out;
  for (CliqueId c : cand) {
    bool maximal = true;
    for (CliqueId o : cand)
      if (t.is_proper_ancestor(o, c)) maximal = false;
    if (maximal) out.insert(c);
  }
  return out;
}

/// A can be completed to an antichain using only vertices numbered after tail(A).
bool completes_to_antichain(const CliqueTree& t, const Graph& g, const VertexSet& k, const VertexSet& a,
                            AntichainRule rule) {
  const Vertex last = tail(t, a);
  std::vector<Vertex> later;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (last == kNone || t.number(v) > t.number(last)) later.push_back(v);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << later.size()); ++m) {
    VertexSet s = a;
    for (std::size_t i = 0; i < later.size(); ++i)
      if ((m >> i) & 1U) s.insert(later[i]);
    if (is_antichain(t, g, k, s, rule)) return true;
  }
  return false;
}

}  // namespace

TEST(RecognizeChordal, FourCycleIsRejectedWithWitness) {
  auto r = recognize_chordal(cycle(4));
  ASSERT_TRUE(std::holds_alternative<NotChordal>(r));
  const auto& cyc = std::get<NotChordal>(r).cycle;
  ASSERT_EQ(cyc.size(), 4u);
  Graph g = cycle(4);
  for (std::size_t i = 0; i < cyc.size(); ++i) EXPECT_TRUE(g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
}

TEST(RecognizeChordal, LongerCyclesGiveChordlessWitnesses) {
  for (std::size_t n = 4; n <= 9; ++n) {
    Graph g = cycle(n);
    auto r = recognize_chordal(g);
    ASSERT_TRUE(std::holds_alternative<NotChordal>(r));
    const auto& cyc = std::get<NotChordal>(r).cycle;
    if (cyc.empty()) continue;
    EXPECT_GE(cyc.size(), 4u);
    for (std::size_t i = 0; i < cyc.size(); ++i)
      for (std::size_t j = i + 1; j < cyc.size(); ++j) {
        const bool consecutive = j == i + 1 || (i == 0 && j + 1 == cyc.size());
        EXPECT_EQ(g.adjacent(cyc[i], cyc[j]), consecutive);
      }
  }
}

TEST(RecognizeChordal, TreesAndE1AreChordal) {
  for (const Graph& g : {path(7), star(5), e1()}) {
    auto r = recognize_chordal(g);
    ASSERT_TRUE(std::holds_alternative<EliminationOrder>(r));
    EXPECT_TRUE(is_perfect_elimination_order(g, std::get<EliminationOrder>(r).order));
  }
}

TEST(BuildCliqueTree, CompleteGraphIsOneNode) {
  Graph g = complete(3);
  CliqueTree t = build_clique_tree(g);
  ASSERT_EQ(t.clique_count(), 1u);
  EXPECT_EQ(t.fset(t.root()), VertexSet::full(3));
}

TEST(BuildCliqueTree, PathOnThreeVertices) {
  CliqueTree t = build_clique_tree(path(3));
  ASSERT_EQ(t.clique_count(), 2u);
  EXPECT_EQ(t.clique(t.root()), VertexSet(3, {0, 1}));
  EXPECT_EQ(t.fset(t.children(t.root()).at(0)), VertexSet(3, {2}));
}

TEST(BuildCliqueTree, E1MatchesTheHandDrawnTree) {
  CliqueTree t = build_clique_tree(e1());
  CliqueTree ref = e1_tree();
  ASSERT_EQ(t.clique_count(), 4u);
  for (CliqueId c = 0; c < 4; ++c) {
    EXPECT_EQ(t.clique(c), ref.clique(c));
    EXPECT_EQ(t.parent(c), ref.parent(c));
    EXPECT_EQ(t.preorder(c), c);
  }
  EXPECT_EQ(t.fset(C1), set({a, b}));
  EXPECT_EQ(t.fset(C2), set({c}));
  EXPECT_EQ(t.fset(C3), set({d}));
  EXPECT_EQ(t.fset(C4), set({e}));
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(t.number(v), v);
  EXPECT_EQ(format_clique_tree(t), "4\n-1 0 1\n0 1 2\n0 1 3\n2 3 4\n");
}

TEST(BuildCliqueTree, RejectsNonChordal) { EXPECT_THROW(build_clique_tree(cycle(5)), NotChordalError); }

TEST(ExplicitCliqueTree, AcceptsE1AndSingleClique) {
  EXPECT_NO_THROW(e1_tree());
  EXPECT_NO_THROW(build_clique_tree_from_spec(complete(3), {VertexSet::full(3)}, {kNone}));
}

TEST(ExplicitCliqueTree, RejectsDisconnectedVertexSubtree) {
  auto parents = e1_parents();
  parents[C4] = C2;
  try {
    build_clique_tree_from_spec(e1(), e1_cliques(), parents);
    FAIL() << "accepted a broken tree";
  } catch (const InvalidCliqueTree& err) {
    EXPECT_EQ(err.invariant(), "subtree");
  }
}

TEST(ExplicitCliqueTree, NamesTheFailingInvariant) {
  auto expect_invariant = [](const Graph& g, std::vector<VertexSet> cl, std::vector<CliqueId> par,
                             const std::string& name) {
    try {
      build_clique_tree_from_spec(g, std::move(cl), std::move(par));
      ADD_FAILURE() << "accepted, expected " << name;
    } catch (const InvalidCliqueTree& err) {
      EXPECT_EQ(err.invariant(), name);
    }
  };
  auto cl = e1_cliques();
  expect_invariant(e1(), cl, {kNone, kNone, C1, C3}, "shape");
  expect_invariant(e1(), cl, {C2, C1, C1, C3}, "shape");
  auto not_clique = cl;
  not_clique[C2] = set({a, c});
  expect_invariant(e1(), not_clique, e1_parents(), "clique");
  auto not_maximal = cl;
  not_maximal[C2] = set({c});
  expect_invariant(e1(), not_maximal, e1_parents(), "maximal-cliques");
  std::vector<VertexSet> missing(cl.begin(), cl.end() - 1);
  expect_invariant(e1(), missing, {kNone, C1, C1}, "maximal-cliques");
}

TEST(ExplicitCliqueTree, CanonicalTreesValidate) {
  for (const auto& entry : random_corpus(150, 40, 4)) {
    const Graph& g = entry.graph;
    CliqueTree t = build_clique_tree(g);
    std::vector<VertexSet> cl;
    std::vector<CliqueId> par;
    for (CliqueId c = 0; c < t.clique_count(); ++c) {
      cl.push_back(t.clique(c));
      par.push_back(t.parent(c));
    }
    EXPECT_NO_THROW(build_clique_tree_from_spec(g, cl, par));
  }
}

TEST(CliqueTreeInvariants, PreorderIntervalsAndNumbering) {
  for (const auto& entry : random_corpus(90, 30, 5)) {
    CliqueTree t = build_clique_tree(entry.graph);
    for (CliqueId x = 0; x < t.clique_count(); ++x)
      for (CliqueId y = 0; y < t.clique_count(); ++y) {
        bool descendant = false;
        for (CliqueId p = y; p != kNone; p = t.parent(p)) descendant = descendant || p == x;
        EXPECT_EQ(t.is_ancestor_or_self(x, y), descendant);
        if (t.is_proper_ancestor(x, y)) {
          EXPECT_LT(t.preorder(x), t.preorder(y));
        }
      }
    for (Vertex u = 0; u < t.vertex_count(); ++u)
      for (Vertex v = 0; v < t.vertex_count(); ++v)
        if (t.preorder(t.home(u)) < t.preorder(t.home(v))) {
          EXPECT_LT(t.number(u), t.number(v));
        }
  }
}

TEST(Reroot, KeepsEdgesAndValidates) {
  for (const auto& entry : random_corpus(30, 20, 6)) {
    CliqueTree t = build_clique_tree(entry.graph);
    for (CliqueId r = 0; r < t.clique_count(); ++r) {
      CliqueTree u = reroot(t, r);
      EXPECT_EQ(u.root(), r);
      std::set<std::pair<CliqueId, CliqueId>> e1s, e2s;
      for (auto [p, c] : t.edges()) e1s.insert({std::min(p, c), std::max(p, c)});
      for (auto [p, c] : u.edges()) e2s.insert({std::min(p, c), std::max(p, c)});
      EXPECT_EQ(e1s, e2s);
      std::vector<VertexSet> cl;
      std::vector<CliqueId> par;
      for (CliqueId c = 0; c < u.clique_count(); ++c) {
        cl.push_back(u.clique(c));
        par.push_back(u.parent(c));
      }
      EXPECT_NO_THROW(build_clique_tree_from_spec(entry.graph, cl, par));
    }
  }
}

TEST(UpSet, Examples) {
  CliqueTree t = e1_tree();
  EXPECT_EQ(up_set(t, set({e})), set({a, b, d}));
  EXPECT_TRUE(up_set(t, set({a, b})).empty());
  EXPECT_EQ(up_set(t, set({c, d})), set({a, b}));
}

TEST(Uncov, Examples) {
  CliqueTree t = e1_tree();
  Graph g = e1();
  EXPECT_EQ(uncov(t, g, set({e})), set({a, b}));
  EXPECT_EQ(uncov(t, g, set({c, d})), set({a}));
  EXPECT_TRUE(uncov(t, g, g.all_vertices()).empty());
}

TEST(TopAntichain, Examples) {
  CliqueTree t = e1_tree();
  EXPECT_EQ(top_antichain(t, set({b, e})), set({b}));
  EXPECT_EQ(top_antichain(t, set({c, d})), set({c, d}));
  EXPECT_TRUE(top_antichain(t, set({})).empty());
}

TEST(LSet, Examples) {
  CliqueTree t = e1_tree();
  EXPECT_EQ(ids(l_set(t, set({c}))), (std::set<CliqueId>{C3}));
  EXPECT_EQ(ids(l_set(t, set({}))), (std::set<CliqueId>{C1}));
  EXPECT_EQ(ids(l_set(t, set({b}))), (std::set<CliqueId>{C2, C3}));
}

TEST(LPrimeSet, Examples) {
  CliqueTree t = e1_tree();
  EXPECT_EQ(ids(l_prime_set(t, set({b}))), (std::set<CliqueId>{C4}));
  EXPECT_TRUE(l_prime_set(t, set({b, d})).empty());
  EXPECT_EQ(ids(l_prime_set(t, set({c}))), (std::set<CliqueId>{C3}));
}

TEST(TreeOperators, AgreeWithNaiveDefinitions) {
  std::vector<std::pair<Graph, CliqueTree>> cases{{e1(), e1_tree()}};
  for (const auto& entry : random_corpus(45, 9, 7)) cases.emplace_back(entry.graph, build_clique_tree(entry.graph));
  for (const auto& [g, t] : cases)
    for (const auto& s : all_subsets(g.vertex_count())) {
      EXPECT_EQ(up_set(t, s), naive_up(t, s));
      EXPECT_EQ(uncov(t, g, s), naive_up(t, s) - closed_neighborhood(g, s));
      EXPECT_EQ(ids(l_set(t, s)), naive_l(t, s));
      EXPECT_EQ(ids(l_prime_set(t, s)), naive_l_prime(t, s));
    }
}

TEST(IsAntichain, Examples) {
  CliqueTree t = e1_tree();
  Graph g = e1();
  EXPECT_TRUE(is_antichain(t, g, set({}), set({b})));
  EXPECT_TRUE(is_antichain(t, g, set({b}), set({e})));
  EXPECT_FALSE(is_antichain(t, g, set({b}), set({e}), AntichainRule::kLiteral));
  EXPECT_FALSE(is_antichain(t, g, set({}), set({d})));
  EXPECT_THROW(is_antichain(t, g, set({c}), set({})), ContractViolation);
}

TEST(IsPartialAntichain, Examples) {
  CliqueTree t = e1_tree();
  Graph g = e1();
  EXPECT_TRUE(is_partial_antichain(t, g, set({}), set({c})));
  EXPECT_FALSE(is_partial_antichain(t, g, set({}), set({d})));
  EXPECT_TRUE(is_partial_antichain(t, g, set({}), set({})));
  EXPECT_TRUE(is_partial_antichain(t, g, set({a, b}), set({})));
}

TEST(IsPartialAntichain, MatchesExhaustiveCompletion) {
  for (const auto& entry : random_corpus(60, 8, 8)) {
    const Graph& g = entry.graph;
    CliqueTree t = build_clique_tree(g);
    const auto root = t.clique(t.root()).to_vector();
    std::vector<VertexSet> ks{g.empty_set()};
    VertexSet k1 = g.empty_set();
    k1.insert(root.front());
    ks.push_back(k1);
    ks.push_back(t.clique(t.root()));
    for (const auto& k : ks)
      for (auto rule : {AntichainRule::kAmended, AntichainRule::kLiteral})
        for (const auto& s : all_subsets(g.vertex_count()))
          EXPECT_EQ(is_partial_antichain(t, g, k, s, rule), completes_to_antichain(t, g, k, s, rule))
              << "A=" << s << " K=" << k;
  }
}

TEST(IsAntichain, TopAntichainOfEveryFeasibleExtensionQualifies) {
  for (const auto& entry : random_corpus(60, 9, 9)) {
    const Graph& g = entry.graph;
    CliqueTree t = build_clique_tree(g);
    const auto root = t.clique(t.root()).to_vector();
    for (std::uint64_t km = 0; km < (std::uint64_t{1} << root.size()); ++km) {
      VertexSet k = g.empty_set();
      for (std::size_t i = 0; i < root.size(); ++i)
        if ((km >> i) & 1U) k.insert(root[i]);
      if (k.size() > 3) continue;
      EnumContext ctx(g, t, g.empty_set(), k, g.empty_set());
      for (const auto& s : all_subsets(g.vertex_count())) {
        if (!k.is_subset_of(s) || (!k.empty() && (s & t.fset(t.root())) != k)) continue;
        if (!is_dominating(g, s)) continue;
        bool feasible = true;
        for (Vertex x : s - k) feasible = feasible && !private_neighbors(g, s, x).empty();
        if (feasible) {
          EXPECT_TRUE(is_antichain(t, g, k, top_antichain(t, s - k))) << s;
        }
      }
    }
  }
}

TEST(Subproblem, Examples) {
  Graph g = e1();
  CliqueTree t = e1_tree();
  Subproblem at_c3 = subproblem(t, g, C3);
  EXPECT_EQ(at_c3.sub.to_old, (std::vector<Vertex>{b, d, e}));
  EXPECT_EQ(at_c3.graph().edge_count(), 2u);
  EXPECT_EQ(at_c3.tree.clique_count(), 2u);
  EXPECT_EQ(at_c3.sub.lift(at_c3.tree.fset(at_c3.tree.root())), set({b, d}));
  EXPECT_EQ(at_c3.clique_to_old, (std::vector<CliqueId>{C3, C4}));

  Subproblem at_root = subproblem(t, g, C1);
  EXPECT_EQ(at_root.graph().edges(), g.edges());
  EXPECT_EQ(at_root.tree.clique_count(), 4u);

  Subproblem at_c4 = subproblem(t, g, C4);
  EXPECT_EQ(at_c4.graph().vertex_count(), 2u);
  EXPECT_EQ(at_c4.graph().edge_count(), 1u);
  EXPECT_EQ(at_c4.tree.clique_count(), 1u);
}
