#ifndef DOMENUM_ENUMERATOR_HPP
#define DOMENUM_ENUMERATOR_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <type_traits>
#include <unordered_set>
#include <vector>

#include "domenum/extension.hpp"

namespace domenum {

/// Counters shared by every nested call of one enumeration.
struct EnumStats {
  /// Antichain vertices plus combination steps currently on the call stack.
  std::size_t depth = 0;
  std::size_t max_depth = 0;
  std::size_t outputs = 0;
  std::size_t extendability_checks = 0;
  std::size_t subproblems = 0;
  /// Combination steps that were entered with an empty K′ (never expected).
  std::size_t empty_k_prime = 0;
  /// Antichains, at any nesting level, whose combinations produced nothing.
  std::size_t barren_antichains = 0;
};

struct EnumOptions {
  /// Stop after this many solutions; 0 means no limit.
  std::size_t limit = 0;
  AntichainRule rule = AntichainRule::kAmended;
  /// Optional counters; left untouched when null.
  EnumStats* stats = nullptr;
};

/// Internal callback: returns false to stop the enumeration.
using Emit = std::function<bool(const VertexSet&)>;

namespace detail {

class DepthGuard {
 public:
  explicit DepthGuard(EnumStats& s) : s_(s) { s_.max_depth = std::max(s_.max_depth, ++s_.depth); }
  ~DepthGuard() { --s_.depth; }
  DepthGuard(const DepthGuard&) = delete;
  DepthGuard& operator=(const DepthGuard&) = delete;

 private:
  EnumStats& s_;
};

class Engine {
 public:
  Engine(AntichainRule rule, EnumStats& stats) : rule_(rule), stats_(stats) {}

  bool antichains(const EnumContext& ctx, const Emit& emit) {
    ++stats_.extendability_checks;
    if (!is_extendable(ctx, ctx.graph().empty_set())) return true;
    VertexSet a = ctx.graph().empty_set();
    return antichains_from(ctx, a, emit);
  }

  bool combinations(const EnumContext& ctx, const VertexSet& a, const VertexSet& d, const Emit& emit) {
    const CliqueTree& t = ctx.tree();
    const Graph& g = ctx.graph();
    auto cs = c_star_low(ctx, a, d);
    if (!cs) return emit(d);
    const CliqueId c = *cs;
    DepthGuard guard(stats_);
    const VertexSet base = a | ctx.k();
    const VertexSet k_prime = base & t.clique(c);
    if (k_prime.empty()) ++stats_.empty_k_prime;
    const VertexSet k1 = q_set(ctx, a, d, c);
    const VertexSet k2 = k_prime - k1;
    const VertexSet blocked = t.clique(c) & (ctx.blocked() | closed_neighborhood(g, base - t.clique(c)));

    ++stats_.subproblems;
    const Subproblem sub = subproblem(t, g, c);
    const EnumContext inner(sub.graph(), sub.tree, sub.sub.restrict(k1), sub.sub.restrict(k2),
                            sub.sub.restrict(blocked));
    return k_extensions(inner, [&](const VertexSet& part) {
      return combinations(ctx, a, d | sub.sub.lift(part), emit);
    });
  }

  bool k_extensions(const EnumContext& ctx, const Emit& emit) {
    return antichains(ctx, [&](const VertexSet& a) {
      bool produced = false;
      const bool more = combinations(ctx, a, a | ctx.k(), [&](const VertexSet& d) {
        produced = true;
        return emit(d);
      });
      if (!produced) ++stats_.barren_antichains;
      return more;
    });
  }

 private:
  bool antichains_from(const EnumContext& ctx, VertexSet& a, const Emit& emit) {
    const CliqueTree& t = ctx.tree();
    const Graph& g = ctx.graph();
    const VertexSet k = ctx.k();
    if (is_antichain(t, g, k, a, rule_) && !emit(a)) return false;
    const Vertex last = tail(t, a);
    const std::size_t start = last == kNone ? 0 : t.number(last) + 1;
    const bool skip_root = !k.empty();
    for (std::size_t i = start; i < t.vertices_in_order().size(); ++i) {
      const Vertex z = t.vertex_at(i);
      if (skip_root && t.home(z) == t.root()) continue;
      a.insert(z);
      bool go = is_partial_antichain(t, g, k, a, rule_);
      if (go) {
        ++stats_.extendability_checks;
        go = is_extendable(ctx, a);
      }
      if (go) {
        DepthGuard guard(stats_);
        if (!antichains_from(ctx, a, emit)) {
          a.erase(z);
          return false;
        }
      }
      a.erase(z);
    }
    return true;
  }

  AntichainRule rule_;
  EnumStats& stats_;
};

template <class Sink>
bool call_sink(Sink& sink, const VertexSet& s) {
  if constexpr (std::is_convertible_v<std::invoke_result_t<Sink&, const VertexSet&>, bool>) {
    return static_cast<bool>(sink(s));
  } else {
    sink(s);
    return true;
  }
}

template <class Sink>
Emit limited(Sink& sink, const EnumOptions& opts, EnumStats& stats) {
  return [&sink, &stats, limit = opts.limit](const VertexSet& s) {
    ++stats.outputs;
    if (!call_sink(sink, s)) return false;
    return limit == 0 || stats.outputs < limit;
  };
}

}  // namespace detail

/// Streams every (K1,K2)-extendable antichain of the context, depth first in
/// vertex-number order. A sink may return false to stop early.
template <class Sink>
void enum_antichains(const EnumContext& ctx, Sink&& sink, const EnumOptions& opts = {}) {
  EnumStats local;
  EnumStats& stats = opts.stats ? *opts.stats : local;
  detail::Engine engine(opts.rule, stats);
  engine.antichains(ctx, detail::limited(sink, opts, stats));
}

/// Streams the feasible extensions of the extendable antichain A whose top
/// antichain (outside K) is A.
template <class Sink>
void enum_combinations(const EnumContext& ctx, const VertexSet& a, Sink&& sink, const EnumOptions& opts = {}) {
  EnumStats local;
  EnumStats& stats = opts.stats ? *opts.stats : local;
  detail::Engine engine(opts.rule, stats);
  engine.combinations(ctx, a, a | ctx.k(), detail::limited(sink, opts, stats));
}

/// Streams every feasible (K1,K2)-extension of the context exactly once.
template <class Sink>
void enum_k_extensions(const EnumContext& ctx, Sink&& sink, const EnumOptions& opts = {}) {
  EnumStats local;
  EnumStats& stats = opts.stats ? *opts.stats : local;
  detail::Engine engine(opts.rule, stats);
  engine.k_extensions(ctx, detail::limited(sink, opts, stats));
}

/// Streams every minimal dominating set of a chordal graph exactly once, using
/// the given clique tree. Throws ContractViolation if the tree is empty for a
/// non-empty graph.
template <class Sink>
void enum_minimal_dominating_sets(const Graph& g, const CliqueTree& t, Sink&& sink, const EnumOptions& opts = {}) {
  if (t.vertex_count() != g.vertex_count()) throw ContractViolation("clique tree does not match the graph");
  if (g.vertex_count() == 0) {
    EnumStats local;
    EnumStats& stats = opts.stats ? *opts.stats : local;
    ++stats.outputs;
    detail::call_sink(sink, g.empty_set());
    return;
  }
  enum_k_extensions(EnumContext(g, t), std::forward<Sink>(sink), opts);
}

/// As above with the canonical clique tree. Throws NotChordalError before any
/// output when g is not chordal.
template <class Sink>
void enum_minimal_dominating_sets(const Graph& g, Sink&& sink, const EnumOptions& opts = {}) {
  const CliqueTree t = build_clique_tree(g);
  enum_minimal_dominating_sets(g, t, std::forward<Sink>(sink), opts);
}

/// Collects every minimal dominating set in emission order.
inline std::vector<VertexSet> minimal_dominating_sets(const Graph& g, const EnumOptions& opts = {}) {
  std::vector<VertexSet> out;
  enum_minimal_dominating_sets(g, [&](const VertexSet& d) { out.push_back(d); }, opts);
  return out;
}

/// Solutions that an enumeration emitted incorrectly: duplicates, and sets
/// that are not minimal dominating sets. Keeps a hash of every output, so it
/// is meant for tests only.
struct AuditReport {
  std::size_t outputs = 0;
  std::vector<VertexSet> duplicates;
  std::vector<VertexSet> invalid;
  bool clean() const { return duplicates.empty() && invalid.empty(); }
};

inline AuditReport audit_enumeration(const Graph& g, const CliqueTree& t, EnumStats* stats = nullptr) {
  AuditReport report;
  std::unordered_set<VertexSet, VertexSetHash> seen;
  EnumOptions opts;
  opts.stats = stats;
  enum_minimal_dominating_sets(
      g, t,
      [&](const VertexSet& d) {
        ++report.outputs;
        if (!seen.insert(d).second) report.duplicates.push_back(d);
        if (!is_minimal_dominating(g, d)) report.invalid.push_back(d);
      },
      opts);
  return report;
}

/// Time between consecutive events of one enumeration run.
struct DelayProfile {
  std::size_t outputs = 0;
  /// gaps[0] precedes the first output, gaps.back() follows the last one.
  std::vector<std::int64_t> gaps_ns;

  std::int64_t pre_gap_ns() const { return gaps_ns.empty() ? 0 : gaps_ns.front(); }
  std::int64_t post_gap_ns() const { return gaps_ns.empty() ? 0 : gaps_ns.back(); }
  /// Gaps strictly between two outputs.
  std::vector<std::int64_t> inter_output_gaps() const {
    if (gaps_ns.size() < 3) return {};
    return {gaps_ns.begin() + 1, gaps_ns.end() - 1};
  }
  std::int64_t max_gap_ns() const {
    return gaps_ns.empty() ? 0 : *std::max_element(gaps_ns.begin(), gaps_ns.end());
  }
  std::int64_t quantile_gap_ns(double q) const {
    if (gaps_ns.empty()) return 0;
    std::vector<std::int64_t> v = gaps_ns;
    const auto k = static_cast<std::size_t>(q * static_cast<double>(v.size() - 1) + 0.5);
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
    return v[k];
  }
  std::int64_t median_gap_ns() const { return quantile_gap_ns(0.5); }
  std::int64_t p95_gap_ns() const { return quantile_gap_ns(0.95); }
};

/// Runs the enumerator with a timing sink. Clique-tree construction counts
/// toward the first gap. Keeps one integer per output.
inline DelayProfile profile_delays(const Graph& g, const EnumOptions& opts = {}) {
  using Clock = std::chrono::steady_clock;
  DelayProfile p;
  auto last = Clock::now();
  auto lap = [&] {
    const auto now = Clock::now();
    p.gaps_ns.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(now - last).count());
    last = now;
  };
  enum_minimal_dominating_sets(
      g,
      [&](const VertexSet&) {
        lap();
        ++p.outputs;
      },
      opts);
  lap();
  return p;
}

}  // namespace domenum

#endif  // DOMENUM_ENUMERATOR_HPP
