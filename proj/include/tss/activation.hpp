#pragma once

#include <optional>
#include <vector>

#include "tss/graph.hpp"

namespace tss {

// Synchronous activation process S_0 ⊆ S_1 ⊆ ... ⊆ S_r, where r is the first
// round with S_r = S_{r+1}.
struct ActivationTrace {
  std::vector<VertexSet> rounds;
  // Round in which each vertex became active; nullopt if it never did.
  std::vector<std::optional<std::size_t>> activated_in;
  bool successful = false;

  std::size_t terminal_round() const { return rounds.size() - 1; }
  const VertexSet& final_set() const { return rounds.back(); }

  // Active set at round i; rounds past termination repeat the fixpoint.
  const VertexSet& at(std::size_t i) const { return rounds[std::min(i, rounds.size() - 1)]; }

  bool active_at(Vertex v, std::size_t round) const {
    return activated_in[v] && *activated_in[v] <= round;
  }
};

inline ActivationTrace simulate(const Instance& inst, VertexSet seed) {
  seed = checked_seed(inst, std::move(seed));
  const Graph& g = inst.graph;
  const std::size_t n = g.vertex_count();

  ActivationTrace trace;
  trace.activated_in.assign(n, std::nullopt);
  std::vector<std::size_t> active_neighbors(n, 0);
  std::vector<char> active(n, 0);

  auto activate = [&](Vertex v, std::size_t round) {
    active[v] = 1;
    trace.activated_in[v] = round;
    for (Vertex u : g.neighbors(v)) ++active_neighbors[u];
  };

  for (Vertex v : seed) activate(v, 0);
  trace.rounds.push_back(seed);

  std::size_t active_count = seed.size();
  std::vector<Vertex> fresh;
  for (std::size_t round = 1;; ++round) {
    fresh.clear();
    for (Vertex v = 0; v < n; ++v)
      if (!active[v] && active_neighbors[v] >= inst.thresholds[v]) fresh.push_back(v);
    if (fresh.empty()) break;
    // All of this round's decisions were made against S_{round-1}; apply afterwards.
    for (Vertex v : fresh) activate(v, round);
    active_count += fresh.size();
    VertexSet next = trace.rounds.back();
    next.insert(next.end(), fresh.begin(), fresh.end());
    std::sort(next.begin(), next.end());
    trace.rounds.push_back(std::move(next));
  }
  trace.successful = active_count == n;
  return trace;
}

// The budget is not checked here.
inline bool is_target_set(const Instance& inst, VertexSet seed) {
  return simulate(inst, std::move(seed)).successful;
}

// Smallest i with group ⊆ S_i, or nullopt if the group never becomes fully active.
inline std::optional<std::size_t> group_activation_round(const ActivationTrace& trace,
                                                         std::span<const Vertex> group) {
  std::size_t round = 0;
  for (Vertex v : group) {
    if (v >= trace.activated_in.size() || !trace.activated_in[v]) return std::nullopt;
    round = std::max(round, *trace.activated_in[v]);
  }
  return round;
}

}  // namespace tss
