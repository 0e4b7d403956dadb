#pragma once

// Independent reference computations used to derive expected values.
// None of them calls into the algebra's multiplication or normal forms.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "lpa/lpa.hpp"

namespace oracle {

using lpa::EdgeIndex;
using lpa::Graph;
using lpa::VertexIndex;
using Path = std::vector<EdgeIndex>;

// Every path of length <= n (including trivial ones) as (start, edges).
inline std::vector<std::pair<VertexIndex, Path>> all_paths(const Graph& g, std::size_t n) {
  std::vector<std::pair<VertexIndex, Path>> out;
  std::function<void(VertexIndex, VertexIndex, Path&)> walk = [&](VertexIndex start,
                                                                   VertexIndex at, Path& p) {
    out.emplace_back(start, p);
    if (p.size() == n) return;
    for (auto e : g.all_edges()) {
      if (g.source(e) != at) continue;
      p.push_back(e);
      walk(start, g.range(e), p);
      p.pop_back();
    }
  };
  for (auto v : g.all_vertices()) {
    Path p;
    walk(v, v, p);
  }
  return out;
}

inline VertexIndex path_end(const Graph& g, VertexIndex start, const Path& p) {
  return p.empty() ? start : g.range(p.back());
}

// Paths ending at target by brute enumeration (caller bounds the length).
inline std::size_t paths_into(const Graph& g, VertexIndex target, std::size_t max_len) {
  std::size_t count = 0;
  for (const auto& [s, p] : all_paths(g, max_len))
    if (path_end(g, s, p) == target) ++count;
  return count;
}

// The canonical basis by brute force, as formatted strings: pairs (p, q)
// with common range, dropping pairs ending in the same special edge,
// where the special edge at u is the smallest edge id u emits.
inline std::set<std::string> canonical_basis(const Graph& g, std::size_t n) {
  std::map<std::uint32_t, std::string> special;
  for (auto e : g.all_edges()) {
    auto u = g.source(e).value;
    if (!special.contains(u) || g.edge_id(e) < special[u]) special[u] = g.edge_id(e);
  }
  auto paths = all_paths(g, n);
  std::set<std::string> out;
  for (const auto& [sp, p] : paths) {
    for (const auto& [sq, q] : paths) {
      if (p.size() + q.size() > n) continue;
      if (path_end(g, sp, p) != path_end(g, sq, q)) continue;
      if (p.empty() && q.empty() && sp != sq) continue;
      if (!p.empty() && !q.empty() && p.back() == q.back() &&
          special[g.source(p.back()).value] == g.edge_id(p.back()))
        continue;
      if (p.empty() && q.empty()) {
        out.insert(g.vertex_id(sp));
        continue;
      }
      std::string s;
      for (auto e : p) s += (s.empty() ? "" : " ") + g.edge_id(e);
      for (auto it = q.rbegin(); it != q.rend(); ++it) s += (s.empty() ? "" : " ") + g.edge_id(*it) + "*";
      out.insert(s);
    }
  }
  return out;
}

// Simple cycles by brute force over closed edge sequences with distinct
// sources, one representative (as a sorted edge multiset) per rotation class.
inline std::set<std::vector<EdgeIndex>> simple_cycle_classes(const Graph& g) {
  std::set<std::vector<EdgeIndex>> out;
  for (const auto& [s, p] : all_paths(g, g.vertex_count())) {
    if (p.empty() || path_end(g, s, p) != s) continue;
    std::set<VertexIndex> srcs;
    for (auto e : p) srcs.insert(g.source(e));
    if (srcs.size() != p.size()) continue;
    std::vector<EdgeIndex> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    out.insert(sorted);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matrix model of L(E) for acyclic E: p q* acts as the sum over paths a
// from r(p) to a sink w of the matrix unit E_{pa, qa} in the block of w.

struct MatrixKey {
  VertexIndex sink;
  Path row, col;
  friend auto operator<=>(const MatrixKey&, const MatrixKey&) = default;
};

template <class Field>
using Matrix = std::map<MatrixKey, typename Field::value_type>;

inline std::vector<std::pair<VertexIndex, Path>> paths_to_sinks(const Graph& g, VertexIndex v) {
  std::vector<std::pair<VertexIndex, Path>> out;
  std::function<void(VertexIndex, Path&)> walk = [&](VertexIndex at, Path& p) {
    if (g.out_edges(at).empty()) out.emplace_back(at, p);
    for (auto e : g.out_edges(at)) {
      p.push_back(e);
      walk(g.range(e), p);
      p.pop_back();
    }
  };
  Path p;
  walk(v, p);
  return out;
}

template <class Field>
void add_entry(Matrix<Field>& m, const MatrixKey& k, const typename Field::value_type& c) {
  auto [it, inserted] = m.try_emplace(k, c);
  if (!inserted) it->second += c;
  if (Field::is_zero(it->second)) m.erase(it);
}

template <class Field>
Matrix<Field> to_matrix(const lpa::Element<Field>& x) {
  const Graph& g = x.graph();
  Matrix<Field> out;
  for (const auto& [m, k] : x.terms()) {
    for (const auto& [w, a] : paths_to_sinks(g, m.vertex)) {
      Path row = m.real, col = m.ghost;
      row.insert(row.end(), a.begin(), a.end());
      col.insert(col.end(), a.begin(), a.end());
      add_entry<Field>(out, {w, row, col}, k);
    }
  }
  return out;
}

template <class Field>
Matrix<Field> multiply(const Matrix<Field>& a, const Matrix<Field>& b) {
  Matrix<Field> out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b)
      if (ka.sink == kb.sink && ka.col == kb.row) add_entry<Field>(out, {ka.sink, ka.row, kb.col}, ca * cb);
  return out;
}

}  // namespace oracle
