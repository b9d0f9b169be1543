#ifndef DOMENUM_IO_HPP
#define DOMENUM_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "domenum/clique_tree.hpp"

namespace domenum {

/// Malformed text input; the message names the offending line.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

/// Non-empty lines with `#` comments stripped, paired with 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.emplace_back(no, line);
  }
  return out;
}

inline std::vector<long long> integers(std::size_t line_no, const std::string& line) {
  std::istringstream in(line);
  std::vector<long long> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(line_no, "expected an integer, got '" + tok + "'");
    }
  }
  return out;
}

}  // namespace detail

/// Edge-list format: the first content line is `n m`, followed by m lines
/// `u v` with 0-based endpoints. `#` starts a comment.
inline Graph parse_graph(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing 'n m' header");
  auto head = detail::integers(lines[0].first, lines[0].second);
  if (head.size() != 2 || head[0] < 0 || head[1] < 0) throw ParseError(lines[0].first, "header must be 'n m'");
  const auto n = static_cast<std::size_t>(head[0]);
  const auto m = static_cast<std::size_t>(head[1]);
  if (lines.size() - 1 != m)
    throw ParseError(lines.back().first, "header announces " + std::to_string(m) + " edges, found " +
                                             std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [no, line] = lines[i];
    auto uv = detail::integers(no, line);
    if (uv.size() != 2) throw ParseError(no, "edge line must be 'u v'");
    for (long long v : uv)
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw ParseError(no, "endpoint " + std::to_string(v) + " out of range");
    if (uv[0] == uv[1]) throw ParseError(no, "self-loop");
    edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
  }
  return Graph::from_edges(n, edges);
}

inline std::string format_graph(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << g.vertex_count() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

/// Clique-tree format: the first content line is the clique count t, then t
/// lines `parent v1 v2 ...` with parent -1 for the root. The tree is checked
/// against g with build_clique_tree_from_spec.
inline CliqueTree parse_clique_tree(std::string_view text, const Graph& g) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing clique count");
  auto head = detail::integers(lines[0].first, lines[0].second);
  if (head.size() != 1 || head[0] < 0) throw ParseError(lines[0].first, "first line must be the clique count");
  const auto t = static_cast<std::size_t>(head[0]);
  if (lines.size() - 1 != t)
    throw ParseError(lines.back().first, "expected " + std::to_string(t) + " clique lines");
  std::vector<VertexSet> cliques;
  std::vector<CliqueId> parents;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [no, line] = lines[i];
    auto nums = detail::integers(no, line);
    if (nums.empty()) throw ParseError(no, "empty clique line");
    if (nums[0] < -1 || nums[0] >= static_cast<long long>(t)) throw ParseError(no, "parent index out of range");
    parents.push_back(nums[0] == -1 ? kNone : static_cast<CliqueId>(nums[0]));
    VertexSet c(g.vertex_count());
    for (std::size_t j = 1; j < nums.size(); ++j) {
      if (nums[j] < 0 || static_cast<std::size_t>(nums[j]) >= g.vertex_count())
        throw ParseError(no, "vertex " + std::to_string(nums[j]) + " out of range");
      c.insert(static_cast<Vertex>(nums[j]));
    }
    cliques.push_back(std::move(c));
  }
  return build_clique_tree_from_spec(g, std::move(cliques), std::move(parents));
}

inline std::string format_clique_tree(const CliqueTree& t) {
  std::ostringstream out;
  out << t.clique_count() << '\n';
  for (CliqueId c = 0; c < t.clique_count(); ++c) {
    out << (t.parent(c) == kNone ? -1LL : static_cast<long long>(t.parent(c)));
    for (Vertex v : t.clique(c)) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

}  // namespace domenum

#endif  // DOMENUM_IO_HPP
