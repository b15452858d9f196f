#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tss/error.hpp"

namespace tss {

using Vertex = std::size_t;
using Threshold = std::size_t;

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

inline VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

  // Builds from an edge list. Endpoint order is irrelevant; loops, duplicates and
  // out-of-range indices are rejected.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
    Graph g(vertex_count);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (u >= vertex_count || v >= vertex_count) {
        throw InvalidArgument("edge " + std::to_string(i) + " [" + std::to_string(u) + "," +
                              std::to_string(v) + "]: endpoint out of range (n=" +
                              std::to_string(vertex_count) + ")");
      }
      if (u == v) {
        throw InvalidArgument("edge " + std::to_string(i) + " [" + std::to_string(u) + "," +
                              std::to_string(v) + "]: self-loop");
      }
      g.adjacency_[u].push_back(v);
      g.adjacency_[v].push_back(u);
    }
    for (Vertex v = 0; v < vertex_count; ++v) {
      auto& nb = g.adjacency_[v];
      std::sort(nb.begin(), nb.end());
      auto dup = std::adjacent_find(nb.begin(), nb.end());
      if (dup != nb.end()) {
        throw InvalidArgument("duplicate edge [" + std::to_string(std::min(v, *dup)) + "," +
                              std::to_string(std::max(v, *dup)) + "]");
      }
    }
    g.edge_count_ = 0;
    for (const auto& nb : g.adjacency_) g.edge_count_ += nb.size();
    g.edge_count_ /= 2;
    return g;
  }

  static Graph from_edges(std::size_t vertex_count, std::initializer_list<Edge> edges) {
    return from_edges(vertex_count, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& nb = adjacency_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  // Subgraph on the same vertex set keeping the edges for which keep(u, v) holds.
  template <typename Pred>
  Graph filter_edges(Pred keep) const {
    std::vector<Edge> kept;
    for (auto [u, v] : edges())
      if (keep(u, v)) kept.emplace_back(u, v);
    return from_edges(vertex_count(), kept);
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

using ThresholdMap = std::vector<Threshold>;

// f(v) = ceil(deg(v) / 2).
inline ThresholdMap majority_thresholds(const Graph& g) {
  ThresholdMap f(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) f[v] = (g.degree(v) + 1) / 2;
  return f;
}

inline bool is_majority(const Graph& g, std::span<const Threshold> f) {
  if (f.size() != g.vertex_count()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (f[v] != (g.degree(v) + 1) / 2) return false;
  return true;
}

struct Instance {
  Graph graph;
  ThresholdMap thresholds;
  std::size_t budget = 0;

  Instance() = default;
  Instance(Graph g, ThresholdMap f, std::size_t k)
      : graph(std::move(g)), thresholds(std::move(f)), budget(k) {
    if (thresholds.size() != graph.vertex_count()) {
      throw InvalidArgument("thresholds: length " + std::to_string(thresholds.size()) +
                            " does not match n=" + std::to_string(graph.vertex_count()));
    }
  }

  static Instance majority(Graph g, std::size_t k) {
    auto f = majority_thresholds(g);
    return Instance(std::move(g), std::move(f), k);
  }

  std::size_t size() const { return graph.vertex_count(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Throws InvalidArgument unless every vertex of seed is < n. Returns the normalized set.
inline VertexSet checked_seed(const Instance& inst, VertexSet seed) {
  for (Vertex v : seed) {
    if (v >= inst.size()) {
      throw InvalidArgument("seed vertex " + std::to_string(v) + " out of range (n=" +
                            std::to_string(inst.size()) + ")");
    }
  }
  return normalized(std::move(seed));
}

}  // namespace tss
