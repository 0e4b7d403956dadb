#pragma once

#include <string>

#include <json.hpp>

#include "lpa/algebra.hpp"
#include "lpa/error.hpp"
#include "lpa/quiver.hpp"
#include "lpa/report.hpp"
#include "lpa/structure.hpp"

namespace lpa {

using Json = nlohmann::ordered_json;

inline Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.vertex_ids();
  Json edges = Json::array();
  for (auto e : g.all_edges())
    edges.push_back({{"id", g.edge_id(e)},
                     {"src", g.vertex_id(g.source(e))},
                     {"dst", g.vertex_id(g.range(e))}});
  j["edges"] = std::move(edges);
  return j;
}

inline Graph graph_from_json(const Json& j) {
  try {
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<EdgeSpec> edges;
    for (const auto& e : j.at("edges"))
      edges.push_back({e.at("id").get<std::string>(), e.at("src").get<std::string>(),
                       e.at("dst").get<std::string>()});
    return Graph(std::move(vertices), edges);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  }
}

// A list of terms {real, ghost, base, coeff}: base is the vertex id for a
// trivial path and null otherwise; coeff is "num/den".
template <class Field>
Json element_to_json(const Element<Field>& x) {
  const Graph& g = x.graph();
  Json out = Json::array();
  for (const auto& [m, k] : x.terms()) {
    Json term;
    Json real = Json::array(), ghost = Json::array();
    for (auto e : m.real) real.push_back(g.edge_id(e));
    for (auto e : m.ghost) ghost.push_back(g.edge_id(e));
    term["real"] = std::move(real);
    term["ghost"] = std::move(ghost);
    term["base"] = m.is_vertex() ? Json(g.vertex_id(m.vertex)) : Json(nullptr);
    term["coeff"] = x.algebra().field().to_fraction(k);
    out.push_back(std::move(term));
  }
  return out;
}

inline Json report_to_json(const Report& r) {
  Json out = Json::array();
  for (const auto& c : r.checks()) {
    Json entry;
    entry["check_name"] = c.name;
    entry["status"] = c.passed ? "pass" : "fail";
    if (!c.witness.empty()) entry["witness"] = c.witness;
    out.push_back(std::move(entry));
  }
  return out;
}

inline Json shape_to_json(const MatricialShape& s) {
  return Json{{"k_blocks", s.k_blocks}, {"laurent_blocks", s.laurent_blocks}};
}

}  // namespace lpa
