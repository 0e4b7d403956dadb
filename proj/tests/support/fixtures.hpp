#pragma once

#include <string>

#include "lpa/lpa.hpp"

namespace fixtures {

using lpa::Graph;
using lpa::parse_graph;

// v with loops y1..yn.
inline Graph rose(int n) {
  std::string text = "vertex v\n";
  for (int i = 1; i <= n; ++i) text += "edge y" + std::to_string(i) + " v v\n";
  return parse_graph(text);
}

inline Graph single_edge() { return parse_graph("vertex v\nvertex w\nedge f v w\n"); }

inline Graph isolated_vertex() { return parse_graph("vertex v\n"); }

// v emits f, g, h to w1, w2, w3.
inline Graph clock3() {
  return parse_graph(
      "vertex v\nvertex w1\nvertex w2\nvertex w3\n"
      "edge f v w1\nedge g v w2\nedge h v w3\n");
}

// Finite truncation of the infinite clock: v emits f to w and k - 1
// further spokes s<i> to x<i>.
inline Graph clock_truncation(int k) {
  std::string text = "vertex v\nvertex w\nedge f v w\n";
  for (int i = 2; i <= k; ++i) {
    auto n = std::to_string(i);
    text += "vertex x" + n + "\nedge s" + n + " v x" + n + "\n";
  }
  return parse_graph(text);
}

// Chain v3 -> v2 -> v1 with two loops f_i, g_i at every v_i.
inline Graph chain_of_roses(int n = 3) {
  std::string text;
  for (int i = 1; i <= n; ++i) {
    auto s = std::to_string(i);
    text += "vertex v" + s + "\nedge f" + s + " v" + s + " v" + s + "\nedge g" + s + " v" + s +
            " v" + s + "\n";
    if (i > 1) text += "edge e" + std::to_string(i - 1) + " v" + s + " v" + std::to_string(i - 1) + "\n";
  }
  return parse_graph(text);
}

// Two loops f1, g1 at v1 only.
inline Graph two_loops() { return parse_graph("vertex v1\nedge f1 v1 v1\nedge g1 v1 v1\n"); }

inline Graph two_cycle() { return parse_graph("vertex v\nvertex w\nedge e v w\nedge f w v\n"); }

// e: v -> w, loop l at w.
inline Graph loop_with_tail() {
  return parse_graph("vertex v\nvertex w\nedge e v w\nedge l w w\n");
}

}  // namespace fixtures
