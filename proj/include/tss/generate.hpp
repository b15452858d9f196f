#pragma once

// Random instance families. All generators draw raw mt19937_64 words, so output
// depends only on the seed, not on the standard library's distributions.

#include <cstdint>
#include <random>
#include <vector>

#include "tss/graph.hpp"

namespace tss {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  // Probability p resolved to 1/2^32.
  bool chance(double p) { return static_cast<double>(engine_() >> 32) < p * 4294967296.0; }

 private:
  std::mt19937_64 engine_;
};

inline Graph random_gnp(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(p)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// Blow-up of a random type graph: each of `types` types becomes a clique or an
// independent set of random size, with at most max_vertices vertices in total.
// Same-size adjacent types may merge, so nd(result) <= types.
inline Graph random_type_blowup(std::size_t types, std::size_t max_vertices, Rng& rng, double edge_p = 0.5) {
  if (types == 0 || max_vertices < types) throw InvalidArgument("type blow-up needs 1 <= types <= max_vertices");
  std::vector<std::size_t> sizes(types, 1);
  std::size_t total = rng.between(types, max_vertices);
  for (std::size_t extra = types; extra < total; ++extra) ++sizes[rng.below(types)];
  std::vector<char> clique(types);
  for (auto& c : clique) c = rng.chance(0.5);
  std::vector<std::vector<char>> joined(types, std::vector<char>(types, 0));
  for (std::size_t a = 0; a < types; ++a)
    for (std::size_t b = a + 1; b < types; ++b) joined[a][b] = joined[b][a] = rng.chance(edge_p);

  std::vector<std::size_t> first(types + 1, 0);
  for (std::size_t a = 0; a < types; ++a) first[a + 1] = first[a] + sizes[a];
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < types; ++a) {
    for (Vertex u = first[a]; u < first[a + 1]; ++u) {
      if (clique[a])
        for (Vertex v = u + 1; v < first[a + 1]; ++v) edges.emplace_back(u, v);
      for (std::size_t b = a + 1; b < types; ++b)
        if (joined[a][b])
          for (Vertex v = first[b]; v < first[b + 1]; ++v) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(total, edges);
}

// Cover of size cover_size (first vertices) with random internal edges; the rest
// are disjoint cliques, each fully joined to a random subset of the cover.
// The cover is a twin cover, so tc(result) <= cover_size.
inline Graph random_twin_cover_graph(std::size_t cover_size, std::size_t max_vertices, Rng& rng) {
  if (max_vertices < cover_size) throw InvalidArgument("twin-cover graph needs cover_size <= max_vertices");
  std::size_t total = rng.between(cover_size, max_vertices);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < cover_size; ++u)
    for (Vertex v = u + 1; v < cover_size; ++v)
      if (rng.chance(0.5)) edges.emplace_back(u, v);
  Vertex next = cover_size;
  while (next < total) {
    std::size_t size = rng.between(1, std::min<std::size_t>(4, total - next));
    std::vector<Vertex> nb;
    for (Vertex c = 0; c < cover_size; ++c)
      if (rng.chance(0.5)) nb.push_back(c);
    for (Vertex u = next; u < next + size; ++u) {
      for (Vertex v = u + 1; v < next + size; ++v) edges.emplace_back(u, v);
      for (Vertex c : nb) edges.emplace_back(c, u);
    }
    next += size;
  }
  return Graph::from_edges(total, edges);
}

}  // namespace tss
