#pragma once

// Structural decompositions: neighborhood-diversity types and twin cover.

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tss/graph.hpp"

namespace tss {

// Two distinct vertices have the same neighborhood type when N(u)\{v} = N(v)\{u}.
inline bool same_neighborhood_type(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return true;
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::size_t i = 0, j = 0;
  while (true) {
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == u) ++j;
    if (i == a.size() || j == b.size()) return i == a.size() && j == b.size();
    if (a[i] != b[j]) return false;
    ++i;
    ++j;
  }
}

enum class GroupKind { independent, clique };

inline const char* to_string(GroupKind k) { return k == GroupKind::clique ? "clique" : "independent"; }

struct TypePartition {
  // Groups ordered by their smallest vertex; each group sorted.
  std::vector<VertexSet> groups;
  std::vector<GroupKind> kinds;
  std::vector<std::size_t> group_of;
  // Vertex i of the type graph is groups[i].
  Graph type_graph;
  // f'(C) when the threshold is constant on C (only filled when thresholds were supplied).
  std::vector<std::optional<Threshold>> group_threshold;

  std::size_t size() const { return groups.size(); }
  std::size_t group_size(std::size_t c) const { return groups[c].size(); }
  bool thresholds_uniform() const {
    return !group_threshold.empty() &&
           std::all_of(group_threshold.begin(), group_threshold.end(),
                       [](const auto& t) { return t.has_value(); });
  }
};

// Coarsest partition into neighborhood types. The relation is an equivalence, so a
// vertex joins the first group whose representative it matches.
inline TypePartition neighborhood_partition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  TypePartition p;
  p.group_of.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    bool placed = false;
    for (std::size_t c = 0; c < p.groups.size() && !placed; ++c) {
      if (same_neighborhood_type(g, p.groups[c].front(), v)) {
        p.groups[c].push_back(v);
        p.group_of[v] = c;
        placed = true;
      }
    }
    if (!placed) {
      p.group_of[v] = p.groups.size();
      p.groups.push_back({v});
    }
  }
  for (const auto& grp : p.groups) {
    bool clique = grp.size() >= 2 && g.has_edge(grp[0], grp[1]);
    p.kinds.push_back(clique ? GroupKind::clique : GroupKind::independent);
  }
  std::vector<Edge> type_edges;
  for (std::size_t c = 0; c < p.groups.size(); ++c)
    for (std::size_t d = c + 1; d < p.groups.size(); ++d)
      if (g.has_edge(p.groups[c].front(), p.groups[d].front())) type_edges.emplace_back(c, d);
  p.type_graph = Graph::from_edges(p.groups.size(), type_edges);
  return p;
}

inline TypePartition neighborhood_partition(const Instance& inst) {
  TypePartition p = neighborhood_partition(inst.graph);
  for (const auto& grp : p.groups) {
    Threshold t = inst.thresholds[grp.front()];
    bool uniform = std::all_of(grp.begin(), grp.end(),
                               [&](Vertex v) { return inst.thresholds[v] == t; });
    p.group_threshold.push_back(uniform ? std::optional<Threshold>(t) : std::nullopt);
  }
  return p;
}

inline std::vector<Edge> twin_edges(const Graph& g) {
  std::vector<Edge> out;
  for (auto [u, v] : g.edges())
    if (same_neighborhood_type(g, u, v)) out.emplace_back(u, v);
  return out;
}

inline bool is_twin_cover(const Graph& g, std::span<const Vertex> cover) {
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : cover) in.at(v) = 1;
  for (auto [u, v] : g.edges())
    if (!in[u] && !in[v] && !same_neighborhood_type(g, u, v)) return false;
  return true;
}

struct TwinDecomposition {
  VertexSet cover;
  // Twin cliques: connected components of G - T, ordered by smallest vertex.
  std::vector<VertexSet> cliques;
  std::vector<VertexSet> clique_neighborhood;
  // Majority threshold shared by the clique's vertices in the original graph.
  std::vector<Threshold> clique_threshold;
  // k_C = max(f'(C) - |N(C)|, 0).
  std::vector<std::size_t> deficit;

  std::size_t cover_size() const { return cover.size(); }
  bool is_big(std::size_t c) const { return deficit[c] > 0; }
  std::size_t deficit_sum() const { return std::accumulate(deficit.begin(), deficit.end(), std::size_t{0}); }
};

namespace detail {

// Exact bounded-depth vertex cover search (degree-1 rule, then branch on a
// maximum-degree vertex v: either v or all of N(v)).
class VertexCoverSearch {
 public:
  explicit VertexCoverSearch(const Graph& h) : h_(h), removed_(h.vertex_count(), 0) {}

  std::optional<VertexSet> solve(std::size_t budget) {
    chosen_.clear();
    if (!branch(budget)) return std::nullopt;
    return normalized(chosen_);
  }

 private:
  std::size_t live_degree(Vertex v) const {
    std::size_t d = 0;
    for (Vertex u : h_.neighbors(v))
      if (!removed_[u]) ++d;
    return d;
  }

  void take(Vertex v) {
    removed_[v] = 1;
    chosen_.push_back(v);
  }
  void untake(std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      removed_[chosen_.back()] = 0;
      chosen_.pop_back();
    }
  }

  bool branch(std::size_t budget) {
    Vertex best = 0;
    std::size_t best_degree = 0, live_edges = 0;
    std::optional<Vertex> pendant;
    for (Vertex v = 0; v < h_.vertex_count(); ++v) {
      if (removed_[v]) continue;
      std::size_t d = live_degree(v);
      live_edges += d;
      if (d > best_degree) {
        best_degree = d;
        best = v;
      }
      if (d == 1 && !pendant) pendant = v;
    }
    live_edges /= 2;
    if (best_degree == 0) return true;
    if (budget == 0 || live_edges > budget * best_degree) return false;

    if (pendant) {
      for (Vertex u : h_.neighbors(*pendant)) {
        if (removed_[u]) continue;
        take(u);
        if (branch(budget - 1)) return true;
        untake(1);
        return false;
      }
    }

    take(best);
    if (branch(budget - 1)) return true;
    untake(1);

    if (best_degree <= budget) {
      std::vector<Vertex> nb;
      for (Vertex u : h_.neighbors(best))
        if (!removed_[u]) nb.push_back(u);
      for (Vertex u : nb) take(u);
      if (branch(budget - nb.size())) return true;
      untake(nb.size());
    }
    return false;
  }

  const Graph& h_;
  std::vector<char> removed_;
  std::vector<Vertex> chosen_;
};

inline TwinDecomposition decompose_with_cover(const Graph& g, VertexSet cover) {
  const std::size_t n = g.vertex_count();
  TwinDecomposition dec;
  dec.cover = normalized(std::move(cover));
  std::vector<char> in_cover(n, 0);
  for (Vertex v : dec.cover) in_cover[v] = 1;

  std::vector<char> seen(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (in_cover[s] || seen[s]) continue;
    VertexSet comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex u : g.neighbors(comp[i]))
        if (!in_cover[u] && !seen[u]) {
          seen[u] = 1;
          comp.push_back(u);
        }
    std::sort(comp.begin(), comp.end());
    for (std::size_t i = 1; i < comp.size(); ++i) {
      if (!same_neighborhood_type(g, comp[0], comp[i]))
        throw std::logic_error("twin cover leaves a non-twin component");
    }
    VertexSet nc;
    for (Vertex u : g.neighbors(s))
      if (in_cover[u]) nc.push_back(u);
    Threshold f = (g.degree(s) + 1) / 2;
    dec.clique_threshold.push_back(f);
    dec.deficit.push_back(f > nc.size() ? f - nc.size() : 0);
    dec.clique_neighborhood.push_back(std::move(nc));
    dec.cliques.push_back(std::move(comp));
  }
  return dec;
}

}  // namespace detail

// Minimum twin cover = minimum vertex cover of G with its twin edges deleted.
// Throws LimitExceeded when tc(G) > limit.
inline TwinDecomposition minimum_twin_cover(const Graph& g,
                                            std::optional<std::size_t> limit = std::nullopt) {
  auto twins = twin_edges(g);
  std::sort(twins.begin(), twins.end());
  Graph h = g.filter_edges(
      [&](Vertex u, Vertex v) { return !std::binary_search(twins.begin(), twins.end(), Edge{u, v}); });
  detail::VertexCoverSearch search(h);
  std::size_t cap = limit ? std::min(*limit, g.vertex_count()) : g.vertex_count();
  for (std::size_t k = 0; k <= cap; ++k) {
    if (auto cover = search.solve(k)) return detail::decompose_with_cover(g, std::move(*cover));
  }
  throw LimitExceeded("twin cover number exceeds limit " + std::to_string(cap));
}

// Cliques grouped by their exact cover neighborhood Q = N(C). Values are clique indices.
inline std::map<VertexSet, std::vector<std::size_t>> twin_clique_types(const TwinDecomposition& dec) {
  std::map<VertexSet, std::vector<std::size_t>> types;
  for (std::size_t c = 0; c < dec.cliques.size(); ++c) types[dec.clique_neighborhood[c]].push_back(c);
  return types;
}

}  // namespace tss
