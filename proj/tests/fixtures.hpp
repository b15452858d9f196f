#pragma once

#include <vector>

#include "tss/graph.hpp"

namespace tss::fixtures {

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph::from_edges(n, e);
}

// Center 0, leaves 1..k.
inline Graph star(std::size_t k) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= k; ++v) e.emplace_back(0, v);
  return Graph::from_edges(k + 1, e);
}

// Sides {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) e.emplace_back(u, v);
  return Graph::from_edges(a + b, e);
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> e = g.edges();
  for (auto [u, v] : h.edges()) e.emplace_back(u + g.vertex_count(), v + g.vertex_count());
  return Graph::from_edges(g.vertex_count() + h.vertex_count(), e);
}

// Cover vertex 0, a triangle {1,2,3} and an edge {4,5}, both fully joined to 0.
inline Graph triangle_and_edge_on_apex() {
  return Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {4, 5}});
}

}  // namespace tss::fixtures
