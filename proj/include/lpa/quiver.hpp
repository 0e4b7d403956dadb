#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpa/error.hpp"

namespace lpa {

struct VertexIndex {
  std::uint32_t value = 0;
  auto operator<=>(const VertexIndex&) const = default;
};

struct EdgeIndex {
  std::uint32_t value = 0;
  auto operator<=>(const EdgeIndex&) const = default;
};

struct EdgeSpec {
  std::string id;
  std::string src;
  std::string dst;
};

// Identifier grammar: a letter or '(' followed by letters, digits and
// `_ . , ( )`. The punctuation is what derived graphs (E_F pairs "(e,f)",
// dual edges "e.f") need in order to round-trip through the file format.
inline bool is_valid_id(std::string_view id) {
  if (id.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(id.front()) && id.front() != '(') return false;
  return std::all_of(id.begin() + 1, id.end(), [&](char c) {
    return alpha(c) || digit(c) || c == '_' || c == '.' || c == ',' ||
           c == '(' || c == ')';
  });
}

// Finite directed multigraph E = (E0, E1, r, s). Vertices and edges are
// stored sorted by id, so index order is identifier order. Immutable.
class Graph {
 public:
  struct Edge {
    std::string id;
    VertexIndex src;
    VertexIndex dst;
  };

  Graph() = default;

  Graph(std::vector<std::string> vertex_ids, const std::vector<EdgeSpec>& edges) {
    std::sort(vertex_ids.begin(), vertex_ids.end());
    std::set<std::string> seen;
    for (const auto& v : vertex_ids) {
      if (!is_valid_id(v)) throw ParseError("invalid vertex id '" + v + "'");
      if (!seen.insert(v).second) throw ParseError("duplicate id '" + v + "'");
    }
    vertices_ = std::move(vertex_ids);
    std::set<std::string> seen_edges;
    std::vector<EdgeSpec> sorted = edges;
    std::sort(sorted.begin(), sorted.end(),
              [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
    for (const auto& e : sorted) {
      if (!is_valid_id(e.id)) throw ParseError("invalid edge id '" + e.id + "'");
      if (!seen_edges.insert(e.id).second) throw ParseError("duplicate id '" + e.id + "'");
      auto s = find_vertex(e.src);
      auto r = find_vertex(e.dst);
      if (!s) throw ParseError("edge '" + e.id + "' references undeclared vertex '" + e.src + "'");
      if (!r) throw ParseError("edge '" + e.id + "' references undeclared vertex '" + e.dst + "'");
      edges_.push_back(Edge{e.id, *s, *r});
    }
    out_.assign(vertices_.size(), {});
    in_.assign(vertices_.size(), {});
    for (std::uint32_t i = 0; i < edges_.size(); ++i) {
      out_[edges_[i].src.value].push_back(EdgeIndex{i});
      in_[edges_[i].dst.value].push_back(EdgeIndex{i});
    }
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return vertices_.empty(); }

  const std::string& vertex_id(VertexIndex v) const { return vertices_.at(v.value); }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e.value); }
  const std::string& edge_id(EdgeIndex e) const { return edge(e).id; }
  VertexIndex source(EdgeIndex e) const { return edge(e).src; }
  VertexIndex range(EdgeIndex e) const { return edge(e).dst; }

  std::span<const EdgeIndex> out_edges(VertexIndex v) const { return out_.at(v.value); }
  std::span<const EdgeIndex> in_edges(VertexIndex v) const { return in_.at(v.value); }

  std::optional<VertexIndex> find_vertex(std::string_view id) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end() || *it != id) return std::nullopt;
    return VertexIndex{static_cast<std::uint32_t>(it - vertices_.begin())};
  }

  std::optional<EdgeIndex> find_edge(std::string_view id) const {
    auto it = std::lower_bound(
        edges_.begin(), edges_.end(), id,
        [](const Edge& e, std::string_view key) { return e.id < key; });
    if (it == edges_.end() || it->id != id) return std::nullopt;
    return EdgeIndex{static_cast<std::uint32_t>(it - edges_.begin())};
  }

  VertexIndex vertex(std::string_view id) const {
    if (auto v = find_vertex(id)) return *v;
    throw UnknownIdError("unknown vertex '" + std::string(id) + "'");
  }

  EdgeIndex edge_index(std::string_view id) const {
    if (auto e = find_edge(id)) return *e;
    throw UnknownIdError("unknown edge '" + std::string(id) + "'");
  }

  std::vector<VertexIndex> all_vertices() const {
    std::vector<VertexIndex> out;
    for (std::uint32_t i = 0; i < vertices_.size(); ++i) out.push_back(VertexIndex{i});
    return out;
  }

  std::vector<EdgeIndex> all_edges() const {
    std::vector<EdgeIndex> out;
    for (std::uint32_t i = 0; i < edges_.size(); ++i) out.push_back(EdgeIndex{i});
    return out;
  }

  std::vector<EdgeSpec> edge_specs() const {
    std::vector<EdgeSpec> out;
    for (const auto& e : edges_)
      out.push_back({e.id, vertex_id(e.src), vertex_id(e.dst)});
    return out;
  }

  const std::vector<std::string>& vertex_ids() const { return vertices_; }

  bool is_sink(VertexIndex v) const { return out_edges(v).empty(); }
  bool is_source(VertexIndex v) const { return in_edges(v).empty(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
      const auto& x = a.edges_[i];
      const auto& y = b.edges_[i];
      if (x.id != y.id || x.src != y.src || x.dst != y.dst) return false;
    }
    return true;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::vector<EdgeIndex>> in_;
};

// A vertex (trivial path) or a nonempty composable edge sequence.
class Path {
 public:
  static Path trivial(VertexIndex v) { return Path(v, {}); }

  static Path from_edges(const Graph& g, std::vector<EdgeIndex> edges) {
    if (edges.empty()) throw AlgebraError("nonempty edge sequence required");
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
      if (g.range(edges[i]) != g.source(edges[i + 1]))
        throw AlgebraError("edges '" + g.edge_id(edges[i]) + "' and '" +
                           g.edge_id(edges[i + 1]) + "' are not composable");
    VertexIndex base = g.source(edges.front());
    return Path(base, std::move(edges));
  }

  VertexIndex source() const { return base_; }
  VertexIndex range(const Graph& g) const {
    return edges_.empty() ? base_ : g.range(edges_.back());
  }
  std::size_t length() const { return edges_.size(); }
  const std::vector<EdgeIndex>& edges() const { return edges_; }

  friend bool operator==(const Path&, const Path&) = default;

 private:
  Path(VertexIndex base, std::vector<EdgeIndex> edges)
      : base_(base), edges_(std::move(edges)) {}

  VertexIndex base_;
  std::vector<EdgeIndex> edges_;
};

// Closed path whose edges have pairwise distinct sources; base = s(e_1).
struct Cycle {
  std::vector<EdgeIndex> edges;

  VertexIndex base(const Graph& g) const { return g.source(edges.front()); }
  std::size_t length() const { return edges.size(); }

  std::vector<VertexIndex> vertices(const Graph& g) const {
    std::vector<VertexIndex> out;
    for (auto e : edges) out.push_back(g.source(e));
    return out;
  }

  Cycle rotated(std::size_t k) const {
    Cycle c = *this;
    std::rotate(c.edges.begin(), c.edges.begin() + (k % edges.size()), c.edges.end());
    return c;
  }

  // Rotation starting at the smallest vertex id.
  Cycle canonical(const Graph& g) const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < edges.size(); ++i)
      if (g.source(edges[i]) < g.source(edges[best])) best = i;
    return rotated(best);
  }

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

inline bool is_cycle(const Graph& g, const Cycle& c) {
  if (c.edges.empty()) return false;
  std::set<VertexIndex> sources;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    auto next = c.edges[(i + 1) % c.edges.size()];
    if (g.range(c.edges[i]) != g.source(next)) return false;
    if (!sources.insert(g.source(c.edges[i])).second) return false;
  }
  return true;
}

inline std::string format_edges(const Graph& g, std::span<const EdgeIndex> edges,
                                std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += sep;
    out += g.edge_id(edges[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graph file format.

inline Graph parse_graph(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::vector<std::size_t> edge_lines;
  std::set<std::string> ids, edge_ids;
  std::map<std::string, std::size_t> vertex_line;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty() || words.front().front() == '#') continue;

    auto check_id = [&](const std::string& id) {
      if (!is_valid_id(id)) throw ParseError("invalid id '" + id + "'", line_no);
    };
    if (words[0] == "vertex") {
      if (words.size() != 2) throw ParseError("expected 'vertex <id>'", line_no);
      check_id(words[1]);
      if (!ids.insert(words[1]).second)
        throw ParseError("duplicate id '" + words[1] + "'", line_no);
      vertices.push_back(words[1]);
      vertex_line[words[1]] = line_no;
    } else if (words[0] == "edge") {
      if (words.size() != 4) throw ParseError("expected 'edge <id> <src> <dst>'", line_no);
      for (std::size_t i = 1; i < 4; ++i) check_id(words[i]);
      if (!edge_ids.insert(words[1]).second)
        throw ParseError("duplicate id '" + words[1] + "'", line_no);
      edges.push_back({words[1], words[2], words[3]});
      edge_lines.push_back(line_no);
    } else {
      throw ParseError("unknown directive '" + words[0] + "'", line_no);
    }
  }
  // Endpoints are checked after the whole file is read, so edges may
  // precede the vertices they mention.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (const auto* end : {&edges[i].src, &edges[i].dst}) {
      if (!vertex_line.contains(*end))
        throw ParseError("edge '" + edges[i].id + "' references undeclared vertex '" +
                             *end + "'",
                         edge_lines[i]);
    }
  }
  if (vertices.empty()) throw ParseError("graph declares no vertices", line_no == 0 ? 1 : line_no);
  return Graph(std::move(vertices), edges);
}

inline std::string to_graph_file(const Graph& g) {
  std::string out;
  for (const auto& v : g.vertex_ids()) out += "vertex " + v + "\n";
  for (const auto& e : g.edge_specs())
    out += "edge " + e.id + " " + e.src + " " + e.dst + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Predicates.

inline std::vector<VertexIndex> sinks(const Graph& g) {
  std::vector<VertexIndex> out;
  for (auto v : g.all_vertices())
    if (g.is_sink(v)) out.push_back(v);
  return out;
}

inline std::vector<VertexIndex> sources(const Graph& g) {
  std::vector<VertexIndex> out;
  for (auto v : g.all_vertices())
    if (g.is_source(v)) out.push_back(v);
  return out;
}

inline std::optional<Cycle> find_cycle(const Graph& g) {
  enum class Mark { white, grey, black };
  std::vector<Mark> mark(g.vertex_count(), Mark::white);
  std::vector<EdgeIndex> stack;  // edges of the current DFS path
  std::optional<Cycle> found;

  std::function<bool(VertexIndex)> visit = [&](VertexIndex v) {
    mark[v.value] = Mark::grey;
    for (auto e : g.out_edges(v)) {
      VertexIndex w = g.range(e);
      if (mark[w.value] == Mark::grey) {
        // w is on the current DFS path: the stack suffix from w, then e.
        auto from_w = std::find_if(stack.begin(), stack.end(),
                                   [&](EdgeIndex s) { return g.source(s) == w; });
        Cycle c{std::vector<EdgeIndex>(from_w, stack.end())};
        c.edges.push_back(e);
        found = c.canonical(g);
        return true;
      }
      if (mark[w.value] == Mark::white) {
        stack.push_back(e);
        if (visit(w)) return true;
        stack.pop_back();
      }
    }
    mark[v.value] = Mark::black;
    return false;
  };
  for (auto v : g.all_vertices())
    if (mark[v.value] == Mark::white && visit(v)) return found;
  return std::nullopt;
}

inline bool is_acyclic(const Graph& g) { return !find_cycle(g).has_value(); }

// All cycles up to rotation, each based at its smallest vertex. Ordered by
// base vertex, then by the edge sequence.
inline std::vector<Cycle> simple_cycles(const Graph& g) {
  std::vector<Cycle> out;
  std::vector<bool> on_path(g.vertex_count(), false);
  std::vector<EdgeIndex> path;

  std::function<void(VertexIndex, VertexIndex)> extend = [&](VertexIndex start,
                                                             VertexIndex v) {
    for (auto e : g.out_edges(v)) {
      VertexIndex w = g.range(e);
      if (w == start) {
        path.push_back(e);
        out.push_back(Cycle{path});
        path.pop_back();
      } else if (start < w && !on_path[w.value]) {
        on_path[w.value] = true;
        path.push_back(e);
        extend(start, w);
        path.pop_back();
        on_path[w.value] = false;
      }
    }
  };
  for (auto s : g.all_vertices()) {
    on_path[s.value] = true;
    extend(s, s);
    on_path[s.value] = false;
  }
  std::sort(out.begin(), out.end(), [&](const Cycle& a, const Cycle& b) {
    auto ka = std::make_pair(a.base(g), a.edges);
    auto kb = std::make_pair(b.base(g), b.edges);
    return ka < kb;
  });
  return out;
}

// An exit is an edge leaving a vertex of c that is not itself an edge of c.
inline std::optional<EdgeIndex> cycle_exit(const Graph& g, const Cycle& c) {
  std::set<EdgeIndex> own(c.edges.begin(), c.edges.end());
  std::set<VertexIndex> on_cycle;
  for (auto e : c.edges) on_cycle.insert(g.source(e));
  for (auto v : on_cycle)
    for (auto e : g.out_edges(v))
      if (!own.contains(e)) return e;
  return std::nullopt;
}

inline bool cycle_has_exit(const Graph& g, const Cycle& c) {
  return cycle_exit(g, c).has_value();
}

// First (in simple_cycles order) cycle with an exit, if any.
inline std::optional<std::pair<Cycle, EdgeIndex>> cycle_with_exit(const Graph& g) {
  for (const auto& c : simple_cycles(g))
    if (auto e = cycle_exit(g, c)) return std::make_pair(c, *e);
  return std::nullopt;
}

inline bool no_cycle_has_exit(const Graph& g) { return !cycle_with_exit(g).has_value(); }

inline std::vector<bool> reachable_from(const Graph& g, VertexIndex v) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexIndex> todo{v};
  seen[v.value] = true;
  while (!todo.empty()) {
    auto u = todo.back();
    todo.pop_back();
    for (auto e : g.out_edges(u)) {
      auto w = g.range(e);
      if (!seen[w.value]) {
        seen[w.value] = true;
        todo.push_back(w);
      }
    }
  }
  return seen;
}

inline bool reaches(const Graph& g, VertexIndex v, VertexIndex w) {
  return reachable_from(g, v)[w.value];
}

// Strongly connected components (Tarjan); component ids are arbitrary.
inline std::vector<std::size_t> strong_components(const Graph& g, std::size_t* count = nullptr) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, unset), low(n, 0), comp(n, unset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t next_index = 0, next_comp = 0;

  std::function<void(std::size_t)> connect = [&](std::size_t v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    for (auto e : g.out_edges(VertexIndex{static_cast<std::uint32_t>(v)})) {
      std::size_t w = g.range(e).value;
      if (index[w] == unset) {
        connect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = next_comp;
      } while (w != v);
      ++next_comp;
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] == unset) connect(v);
  if (count) *count = next_comp;
  return comp;
}

struct CofinalityResult {
  bool cofinal = true;
  std::optional<VertexIndex> vertex;  // a non-cofinal vertex
  std::string tail;                   // the sink or cycle it cannot reach
};

// On a finite graph every element of E^{<=inf} ends in a sink or
// eventually runs inside a strongly connected component carrying a cycle,
// so cofinality reduces to reaching every sink and every such component.
inline CofinalityResult is_cofinal(const Graph& g) {
  std::size_t ncomp = 0;
  auto comp = strong_components(g, &ncomp);
  // One representative cycle per cyclic component.
  std::map<std::size_t, EdgeIndex> cyclic;
  for (auto e : g.all_edges()) {
    auto s = comp[g.source(e).value];
    if (s == comp[g.range(e).value] && !cyclic.contains(s)) cyclic[s] = e;
  }
  for (auto v : g.all_vertices()) {
    auto seen = reachable_from(g, v);
    for (auto w : sinks(g))
      if (!seen[w.value]) return {false, v, "sink " + g.vertex_id(w)};
    for (const auto& [c, e] : cyclic) {
      if (!seen[g.source(e).value]) {
        // Describe the tail by an actual cycle through e's component.
        std::string desc = "cycle through " + g.vertex_id(g.source(e));
        for (const auto& cyc : simple_cycles(g)) {
          if (comp[cyc.base(g).value] == c) {
            desc = "cycle " + format_edges(g, cyc.edges);
            break;
          }
        }
        return {false, v, desc};
      }
    }
  }
  return {};
}

// Number of paths (the trivial one included) that end at `target` and use
// no forbidden edge. Throws AlgebraError when a cycle avoiding the
// forbidden edges reaches `target`, i.e. the count is infinite.
inline std::uint64_t count_paths_into(const Graph& g, VertexIndex target,
                                      std::span<const EdgeIndex> forbidden = {}) {
  std::vector<bool> banned(g.edge_count(), false);
  for (auto e : forbidden) banned[e.value] = true;

  // Vertices that reach target through allowed edges.
  std::vector<bool> relevant(g.vertex_count(), false);
  std::vector<VertexIndex> todo{target};
  relevant[target.value] = true;
  while (!todo.empty()) {
    auto u = todo.back();
    todo.pop_back();
    for (auto e : g.in_edges(u)) {
      if (banned[e.value]) continue;
      auto w = g.source(e);
      if (!relevant[w.value]) {
        relevant[w.value] = true;
        todo.push_back(w);
      }
    }
  }

  constexpr std::uint64_t unset = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> memo(g.vertex_count(), unset);
  std::vector<bool> active(g.vertex_count(), false);
  std::function<std::uint64_t(VertexIndex)> from = [&](VertexIndex u) -> std::uint64_t {
    if (memo[u.value] != unset) return memo[u.value];
    if (active[u.value])
      throw AlgebraError("infinitely many paths end at '" + g.vertex_id(target) + "'");
    active[u.value] = true;
    std::uint64_t total = (u == target) ? 1 : 0;
    for (auto e : g.out_edges(u)) {
      if (banned[e.value] || !relevant[g.range(e).value]) continue;
      std::uint64_t add = from(g.range(e));
      if (total > std::numeric_limits<std::uint64_t>::max() - add)
        throw AlgebraError("path count overflow");
      total += add;
    }
    active[u.value] = false;
    memo[u.value] = total;
    return total;
  };

  std::uint64_t sum = 0;
  for (auto v : g.all_vertices())
    if (relevant[v.value]) sum += from(v);
  return sum;
}

// Length of the longest path; requires an acyclic graph.
inline std::size_t longest_path_length(const Graph& g) {
  if (!is_acyclic(g)) throw AlgebraError("longest path is unbounded in a cyclic graph");
  std::vector<std::optional<std::size_t>> memo(g.vertex_count());
  std::function<std::size_t(VertexIndex)> depth = [&](VertexIndex v) -> std::size_t {
    if (memo[v.value]) return *memo[v.value];
    std::size_t best = 0;
    for (auto e : g.out_edges(v)) best = std::max(best, 1 + depth(g.range(e)));
    memo[v.value] = best;
    return best;
  };
  std::size_t best = 0;
  for (auto v : g.all_vertices()) best = std::max(best, depth(v));
  return best;
}

}  // namespace lpa
