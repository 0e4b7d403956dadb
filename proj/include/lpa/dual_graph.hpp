#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/field.hpp"
#include "lpa/quiver.hpp"
#include "lpa/report.hpp"
#include "lpa/structure.hpp"

namespace lpa {

struct SubgraphSpec {
  std::vector<VertexIndex> vertices;
  std::vector<EdgeIndex> edges;

  static SubgraphSpec whole(const Graph& g) { return {g.all_vertices(), g.all_edges()}; }
};

inline std::string dual_edge_id(const Graph& g, EdgeIndex e, EdgeIndex f) {
  return g.edge_id(e) + "." + g.edge_id(f);
}

// D(E): one vertex per edge, one edge e.f per path ef of length two.
inline Graph usual_dual(const Graph& g) {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  for (auto e : g.all_edges()) {
    vertices.push_back(g.edge_id(e));
    for (auto f : g.out_edges(g.range(e)))
      edges.push_back({dual_edge_id(g, e, f), g.edge_id(e), g.edge_id(f)});
  }
  if (vertices.empty()) return Graph{};
  return Graph(vertices, edges);
}

// D_E(F) for a subgraph F: D(F) plus the vertices F_1^0 (sinks of F) and
// F_2^0 = s(F^1) n s(E^1 \ F^1), each e in F^1 landing there becoming an
// edge from vertex e to r(e).
inline Graph dual_in(const Graph& g, const SubgraphSpec& F) {
  std::set<VertexIndex> f0(F.vertices.begin(), F.vertices.end());
  std::set<EdgeIndex> f1(F.edges.begin(), F.edges.end());
  for (auto v : f0)
    if (v.value >= g.vertex_count()) throw UnknownIdError("vertex index out of range");
  for (auto e : f1) {
    if (e.value >= g.edge_count()) throw UnknownIdError("edge index out of range");
    if (!f0.contains(g.source(e)) || !f0.contains(g.range(e)))
      throw AlgebraError("edge " + g.edge_id(e) + " has an endpoint outside the subgraph");
  }

  std::set<VertexIndex> emits_in_F, emits_outside;
  for (auto e : g.all_edges()) (f1.contains(e) ? emits_in_F : emits_outside).insert(g.source(e));
  std::set<VertexIndex> f1_0, f2_0;
  for (auto v : f0) {
    if (!emits_in_F.contains(v))
      f1_0.insert(v);
    else if (emits_outside.contains(v))
      f2_0.insert(v);
  }

  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  for (auto e : f1) {
    vertices.push_back(g.edge_id(e));
    for (auto f : g.out_edges(g.range(e)))
      if (f1.contains(f)) edges.push_back({dual_edge_id(g, e, f), g.edge_id(e), g.edge_id(f)});
    if (f1_0.contains(g.range(e)) || f2_0.contains(g.range(e)))
      edges.push_back({g.edge_id(e), g.edge_id(e), g.vertex_id(g.range(e))});
  }
  for (auto v : f1_0) vertices.push_back(g.vertex_id(v));
  for (auto v : f2_0) vertices.push_back(g.vertex_id(v));
  if (vertices.empty()) return Graph{};
  return Graph(vertices, edges);
}

inline Graph dual(const Graph& g) { return dual_in(g, SubgraphSpec::whole(g)); }

namespace detail {

inline void compare_pair(Report& r, const std::string& label, const Graph& a, const Graph& b) {
  auto show = [](bool x) { return std::string(x ? "yes" : "no"); };
  const bool acyc_a = is_acyclic(a), acyc_b = is_acyclic(b);
  r.add(label + ": acyclic", acyc_a == acyc_b, show(acyc_a) + " vs " + show(acyc_b));
  auto da = dimension(a), db = dimension(b);
  if (da && db)
    r.add(label + ": dimension", *da == *db, std::to_string(*da) + " vs " + std::to_string(*db));
  const bool nx_a = no_cycle_has_exit(a), nx_b = no_cycle_has_exit(b);
  r.add(label + ": directly finite", nx_a == nx_b, show(nx_a) + " vs " + show(nx_b));
  if (nx_a && nx_b && !a.empty() && !b.empty()) {
    auto sa = matricial_shape(a), sb = matricial_shape(b);
    r.add(label + ": matricial shape", sa == sb,
          "K " + format_blocks(sa.k_blocks) + " Laurent " + format_blocks(sa.laurent_blocks) +
              " vs K " + format_blocks(sb.k_blocks) + " Laurent " +
              format_blocks(sb.laurent_blocks));
  }
}

}  // namespace detail

// Isomorphism invariants of E against d(E), and against D(E) when E has
// no sinks.
inline Report compare_invariants(const Graph& g) {
  Report r;
  detail::compare_pair(r, "d(E)", g, dual(g));
  if (sinks(g).empty()) detail::compare_pair(r, "D(E)", g, usual_dual(g));
  return r;
}

}  // namespace lpa
