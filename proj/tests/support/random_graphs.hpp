#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "lpa/lpa.hpp"

namespace gen {

using lpa::EdgeSpec;
using lpa::Graph;
using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::string vname(std::size_t i) { return "v" + std::to_string(i); }
inline std::string ename(std::size_t i) { return "e" + std::to_string(i); }

inline Graph assemble(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back(vname(i));
  std::vector<EdgeSpec> es;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    es.push_back({ename(i), vname(arcs[i].first), vname(arcs[i].second)});
  return Graph(vs, es);
}

// Arbitrary multigraph (loops and parallel edges allowed).
inline Graph random_graph(Rng& rng, std::size_t max_v = 6, std::size_t max_e = 9) {
  std::size_t n = uniform(rng, 1, max_v);
  std::size_t m = uniform(rng, 0, max_e);
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t i = 0; i < m; ++i) arcs.emplace_back(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1));
  return assemble(n, arcs);
}

// Edges only go from a lower to a higher position of a random ordering.
inline Graph random_acyclic(Rng& rng, std::size_t max_v = 6, std::size_t max_e = 9) {
  std::size_t n = uniform(rng, 1, max_v);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  if (n > 1) {
    std::size_t m = uniform(rng, 0, max_e);
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t a = uniform(rng, 0, n - 2);
      std::size_t b = uniform(rng, a + 1, n - 1);
      arcs.emplace_back(order[a], order[b]);
    }
  }
  return assemble(n, arcs);
}

// Disjoint cycles whose vertices emit nothing else, fed by acyclic trees.
inline Graph random_no_exit(Rng& rng, std::size_t max_v = 6, std::size_t max_e = 9) {
  std::size_t n = uniform(rng, 1, max_v);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  // The last c positions are carved into cycles.
  std::size_t c = uniform(rng, 0, std::min<std::size_t>(n, 3));
  std::size_t first_cycle = n - c;
  for (std::size_t i = first_cycle; i < n;) {
    std::size_t len = uniform(rng, 1, n - i);
    for (std::size_t k = 0; k < len; ++k)
      arcs.emplace_back(order[i + k], order[i + (k + 1) % len]);
    i += len;
  }
  if (first_cycle > 0) {
    std::size_t budget = max_e > arcs.size() ? max_e - arcs.size() : 0;
    std::size_t m = uniform(rng, 0, budget);
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t a = uniform(rng, 0, first_cycle - 1);
      if (a + 1 >= n) continue;
      std::size_t b = uniform(rng, a + 1, n - 1);
      arcs.emplace_back(order[a], order[b]);
    }
  }
  return assemble(n, arcs);
}

// A graph in which some cycle has an exit.
inline Graph random_with_exit(Rng& rng, std::size_t max_v = 6, std::size_t max_e = 9) {
  while (true) {
    Graph g = random_graph(rng, max_v, max_e);
    if (!lpa::no_cycle_has_exit(g)) return g;
  }
}

inline Graph random_cyclic(Rng& rng, std::size_t max_v = 6, std::size_t max_e = 9) {
  while (true) {
    Graph g = random_graph(rng, max_v, max_e);
    if (!lpa::is_acyclic(g)) return g;
  }
}

inline std::vector<lpa::EdgeIndex> random_edge_subset(Rng& rng, const Graph& g) {
  std::vector<lpa::EdgeIndex> out;
  std::bernoulli_distribution pick(0.5);
  for (auto e : g.all_edges())
    if (pick(rng)) out.push_back(e);
  return out;
}

// Random combination of canonical monomials of total length <= max_len.
template <class Field>
lpa::Element<Field> random_element(const std::shared_ptr<const lpa::Algebra<Field>>& alg, Rng& rng,
                                   std::size_t max_terms = 4, std::size_t max_len = 3,
                                   long max_coeff = 3) {
  auto pool = lpa::enumerate_basis(alg->graph(), max_len);
  auto x = alg->zero();
  std::size_t t = uniform(rng, 1, max_terms);
  std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
  for (std::size_t i = 0; i < t; ++i) {
    long k = coeff(rng);
    if (k == 0) k = 1;
    x += alg->monomial(pool[uniform(rng, 0, pool.size() - 1)], alg->field().from_int(k));
  }
  return x;
}

template <class Field>
lpa::Element<Field> random_nonzero_element(const std::shared_ptr<const lpa::Algebra<Field>>& alg,
                                           Rng& rng, std::size_t max_terms = 4,
                                           std::size_t max_len = 3) {
  while (true) {
    auto x = random_element(alg, rng, max_terms, max_len);
    if (!x.is_zero()) return x;
  }
}

// A random word of generators (not necessarily composable).
inline lpa::RawWord random_word(Rng& rng, const Graph& g, std::size_t max_len = 8) {
  lpa::RawWord w;
  std::size_t len = uniform(rng, 1, max_len);
  for (std::size_t i = 0; i < len; ++i) {
    std::size_t kind = g.edge_count() == 0 ? 0 : uniform(rng, 0, 4);
    if (kind == 0)
      w.push_back(lpa::Generator::of_vertex(lpa::VertexIndex{static_cast<std::uint32_t>(uniform(rng, 0, g.vertex_count() - 1))}));
    else if (kind <= 2)
      w.push_back(lpa::Generator::of_edge(lpa::EdgeIndex{static_cast<std::uint32_t>(uniform(rng, 0, g.edge_count() - 1))}));
    else
      w.push_back(lpa::Generator::of_ghost(lpa::EdgeIndex{static_cast<std::uint32_t>(uniform(rng, 0, g.edge_count() - 1))}));
  }
  return w;
}

// A composable word: a random walk in the extended graph.
inline lpa::RawWord random_walk(Rng& rng, const Graph& g, std::size_t max_len = 8) {
  lpa::RawWord w;
  auto here = lpa::VertexIndex{static_cast<std::uint32_t>(uniform(rng, 0, g.vertex_count() - 1))};
  std::size_t len = uniform(rng, 1, max_len);
  w.push_back(lpa::Generator::of_vertex(here));
  for (std::size_t i = 1; i < len; ++i) {
    auto out = g.out_edges(here);
    auto in = g.in_edges(here);
    if (out.empty() && in.empty()) break;
    std::size_t pick = uniform(rng, 0, out.size() + in.size() - 1);
    if (pick < out.size()) {
      w.push_back(lpa::Generator::of_edge(out[pick]));
      here = g.range(out[pick]);
    } else {
      auto e = in[pick - out.size()];
      w.push_back(lpa::Generator::of_ghost(e));
      here = g.source(e);
    }
  }
  return w;
}

}  // namespace gen
