#pragma once

// Majority target set selection parameterized by the twin cover number.
//
// Every target set puts at least k_C seeds into each twin clique C, and the
// deficits plus the whole cover always suffice. A budget k in between leaves
// w = k - sum k_C "excess" seeds; the solver enumerates a canonical family of
// ways to place them and simulates each candidate.

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tss/activation.hpp"
#include "tss/decompose.hpp"
#include "tss/exact.hpp"
#include "tss/parallel.hpp"

namespace tss {

struct TrivialBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
};

inline TrivialBounds trivial_bounds(const TwinDecomposition& dec) {
  std::size_t lower = dec.deficit_sum();
  return {lower, lower + dec.cover_size()};
}

struct DistributionPlan {
  struct TypeShare {
    VertexSet type;  // Q = N(C)
    std::size_t big = 0;
    std::size_t small = 0;
  };

  VertexSet cover_seed;
  std::vector<TypeShare> shares;    // one entry per clique type, in type order
  std::vector<std::size_t> excess;  // per clique, on top of its deficit

  std::size_t total_excess() const {
    return cover_seed.size() + std::accumulate(excess.begin(), excess.end(), std::size_t{0});
  }
};

namespace detail {

// parts[i] <= caps[i], sum(parts) == total; lexicographically descending order.
inline bool for_each_capped_composition(std::size_t total, std::span<const std::size_t> caps,
                                        const std::function<bool(std::span<const std::size_t>)>& visit) {
  std::vector<std::size_t> parts(caps.size(), 0);
  std::vector<std::size_t> suffix_cap(caps.size() + 1, 0);
  for (std::size_t i = caps.size(); i-- > 0;) suffix_cap[i] = suffix_cap[i + 1] + caps[i];
  if (suffix_cap[0] < total) return false;

  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) -> bool {
    if (i == caps.size()) return left == 0 && visit(parts);
    std::size_t hi = std::min(left, caps[i]);
    std::size_t lo = left > suffix_cap[i + 1] ? left - suffix_cap[i + 1] : 0;
    for (std::size_t v = hi + 1; v-- > lo;) {
      parts[i] = v;
      if (rec(i + 1, left - v)) return true;
    }
    parts[i] = 0;
    return false;
  };
  return rec(0, total);
}

// Non-increasing sequences of exactly `slots` values in [0, max_part] summing to total.
inline bool for_each_capped_partition(std::size_t total, std::size_t slots, std::size_t max_part,
                                      const std::function<bool(std::span<const std::size_t>)>& visit) {
  if (total > slots * max_part) return false;
  std::vector<std::size_t> parts(slots, 0);
  std::function<bool(std::size_t, std::size_t, std::size_t)> rec =
      [&](std::size_t i, std::size_t left, std::size_t bound) -> bool {
    if (i == slots) return left == 0 && visit(parts);
    std::size_t remaining_slots = slots - i;
    if (left > remaining_slots * bound) return false;
    // Smallest value still able to cover `left` when every later part is <= it.
    std::size_t lo = (left + remaining_slots - 1) / remaining_slots;
    for (std::size_t v = std::min(bound, left) + 1; v-- > lo;) {
      parts[i] = v;
      if (rec(i + 1, left - v, v)) return true;
    }
    parts[i] = 0;
    return false;
  };
  return rec(0, total, max_part);
}

class PlanEnumerator {
 public:
  using Sink = std::function<bool(const DistributionPlan&)>;

  explicit PlanEnumerator(const TwinDecomposition& dec) : dec_(dec) {
    for (const auto& [q, members] : twin_clique_types(dec)) {
      TypeClasses tc;
      tc.type = q;
      for (std::size_t c : members) {
        if (dec.is_big(c))
          tc.big.push_back(c);
        else
          tc.small_by_size[dec.cliques[c].size()].push_back(c);
      }
      // Largest first, ties by clique index.
      std::stable_sort(tc.big.begin(), tc.big.end(), [&](std::size_t a, std::size_t b) {
        return dec.cliques[a].size() > dec.cliques[b].size();
      });
      for (std::size_t c : tc.big) tc.capacity += spare(c);
      for (const auto& [size, list] : tc.small_by_size) tc.capacity += size * list.size();
      types_.push_back(std::move(tc));
    }
  }

  // Calls sink for every plan with exactly w excess seeds; stops when sink returns true.
  bool run(std::size_t w, const Sink& sink) {
    sink_ = &sink;
    plan_.excess.assign(dec_.cliques.size(), 0);
    plan_.shares.assign(types_.size(), {});
    for (std::size_t i = 0; i < types_.size(); ++i) plan_.shares[i].type = types_[i].type;

    const std::size_t t = dec_.cover_size();
    for (std::size_t w1 = 0; w1 <= std::min(w, t); ++w1) {
      bool stop = first_subset(t, w1, [&](const VertexSet& idx) {
        plan_.cover_seed.clear();
        for (std::size_t i : idx) plan_.cover_seed.push_back(dec_.cover[i]);
        return distribute_over_types(w - w1);
      }).has_value();
      if (stop) return true;
    }
    return false;
  }

 private:
  struct TypeClasses {
    VertexSet type;
    std::vector<std::size_t> big;
    std::map<std::size_t, std::vector<std::size_t>> small_by_size;
    std::size_t capacity = 0;
  };

  std::size_t spare(std::size_t c) const { return dec_.cliques[c].size() - dec_.deficit[c]; }

  bool distribute_over_types(std::size_t w2) {
    std::vector<std::size_t> caps;
    for (const auto& tc : types_) caps.push_back(tc.capacity);
    return for_each_capped_composition(w2, caps, [&](std::span<const std::size_t> per_type) {
      return place_type(0, per_type);
    });
  }

  bool place_type(std::size_t i, std::span<const std::size_t> per_type) {
    if (i == types_.size()) return (*sink_)(plan_);
    const std::size_t wq = per_type[i];
    for (std::size_t wb = wq + 1; wb-- > 0;) {
      std::size_t ws = wq - wb;
      plan_.shares[i].big = wb;
      plan_.shares[i].small = ws;
      if (place_big(i, wb, ws, per_type)) return true;
    }
    return false;
  }

  // The wb excess seeds go to the wb largest big cliques of the type.
  bool place_big(std::size_t i, std::size_t wb, std::size_t ws, std::span<const std::size_t> per_type) {
    const auto& tc = types_[i];
    std::size_t slots = std::min(wb, tc.big.size());
    std::vector<std::size_t> caps;
    for (std::size_t j = 0; j < slots; ++j) caps.push_back(spare(tc.big[j]));
    bool stop = for_each_capped_composition(wb, caps, [&](std::span<const std::size_t> parts) {
      for (std::size_t j = 0; j < slots; ++j) plan_.excess[tc.big[j]] = parts[j];
      return place_small(i, ws, per_type);
    });
    for (std::size_t j = 0; j < slots; ++j) plan_.excess[tc.big[j]] = 0;
    return stop;
  }

  // Small cliques of equal type and size are interchangeable: spread ws over the
  // size classes, and within a class use non-increasing multisets only.
  bool place_small(std::size_t i, std::size_t ws, std::span<const std::size_t> per_type) {
    const auto& tc = types_[i];
    std::vector<const std::vector<std::size_t>*> classes;
    std::vector<std::size_t> sizes, caps;
    for (const auto& [size, list] : tc.small_by_size) {
      classes.push_back(&list);
      sizes.push_back(size);
      caps.push_back(size * list.size());
    }
    return for_each_capped_composition(ws, caps, [&](std::span<const std::size_t> per_class) {
      return place_small_class(i, 0, classes, sizes, per_class, per_type);
    });
  }

  bool place_small_class(std::size_t i, std::size_t k, const std::vector<const std::vector<std::size_t>*>& classes,
                         const std::vector<std::size_t>& sizes, std::span<const std::size_t> per_class,
                         std::span<const std::size_t> per_type) {
    if (k == classes.size()) return place_type(i + 1, per_type);
    const auto& list = *classes[k];
    bool stop = for_each_capped_partition(per_class[k], list.size(), sizes[k], [&](std::span<const std::size_t> parts) {
      for (std::size_t j = 0; j < list.size(); ++j) plan_.excess[list[j]] = parts[j];
      return place_small_class(i, k + 1, classes, sizes, per_class, per_type);
    });
    for (std::size_t c : list) plan_.excess[c] = 0;
    return stop;
  }

  const TwinDecomposition& dec_;
  std::vector<TypeClasses> types_;
  const Sink* sink_ = nullptr;
  DistributionPlan plan_;
};

}  // namespace detail

inline std::vector<DistributionPlan> enumerate_plans(const TwinDecomposition& dec, std::size_t w) {
  std::vector<DistributionPlan> plans;
  detail::PlanEnumerator(dec).run(w, [&](const DistributionPlan& p) {
    plans.push_back(p);
    return false;
  });
  return plans;
}

// Deficit seeds plus the plan's excess, lowest-indexed vertices of each clique.
inline VertexSet materialize_plan(const TwinDecomposition& dec, const DistributionPlan& plan) {
  VertexSet seed = plan.cover_seed;
  for (std::size_t c = 0; c < dec.cliques.size(); ++c) {
    std::size_t take = dec.deficit[c] + (plan.excess.empty() ? 0 : plan.excess[c]);
    seed.insert(seed.end(), dec.cliques[c].begin(), dec.cliques[c].begin() + take);
  }
  return normalized(std::move(seed));
}

struct TcOptions {
  std::size_t max_cover = 8;
  std::size_t jobs = 1;
};

namespace detail {

inline void require_majority(const Instance& inst) {
  if (!is_majority(inst.graph, inst.thresholds))
    throw PreconditionError("thresholds are not the majority function of the graph");
}

inline TwinDecomposition guarded_twin_cover(const Instance& inst, const TcOptions& opts) {
  try {
    return minimum_twin_cover(inst.graph, opts.max_cover);
  } catch (const LimitExceeded&) {
    throw LimitExceeded("twin cover number exceeds --max-cover " + std::to_string(opts.max_cover));
  }
}

inline std::optional<VertexSet> decide_with(const Instance& inst, const TwinDecomposition& dec,
                                            std::size_t k, std::size_t jobs) {
  auto [lower, upper] = trivial_bounds(dec);
  if (k < lower) return std::nullopt;
  if (k >= upper) {
    DistributionPlan all_cover;
    all_cover.cover_seed = dec.cover;
    VertexSet witness = materialize_plan(dec, all_cover);
    if (is_target_set(inst, witness)) return witness;
    throw std::logic_error("deficits plus the twin cover failed to activate the graph");
  }
  const std::size_t w = k - lower;
  std::optional<VertexSet> found;
  if (jobs <= 1) {
    PlanEnumerator(dec).run(w, [&](const DistributionPlan& plan) {
      VertexSet seed = materialize_plan(dec, plan);
      if (!is_target_set(inst, seed)) return false;
      found = std::move(seed);
      return true;
    });
    return found;
  }
  // First success in plan order, whatever the scheduling.
  auto plans = enumerate_plans(dec, w);
  std::vector<char> ok(plans.size(), 0);
  parallel_for(plans.size(), jobs, [&](std::size_t i) { ok[i] = is_target_set(inst, materialize_plan(dec, plans[i])); });
  for (std::size_t i = 0; i < plans.size(); ++i)
    if (ok[i]) return materialize_plan(dec, plans[i]);
  return std::nullopt;
}

}  // namespace detail

// Decision at budget inst.budget: some verified target set of size at most the
// budget (exactly the budget when it lies strictly inside the trivial bounds).
inline std::optional<VertexSet> decide_majority_tc(const Instance& inst, const TcOptions& opts = {}) {
  detail::require_majority(inst);
  TwinDecomposition dec = detail::guarded_twin_cover(inst, opts);
  return detail::decide_with(inst, dec, inst.budget, opts.jobs);
}

// Smallest verified target set within the budget: scans k upward from sum k_C.
inline std::optional<VertexSet> solve_majority_tc(const Instance& inst, const TcOptions& opts = {}) {
  detail::require_majority(inst);
  TwinDecomposition dec = detail::guarded_twin_cover(inst, opts);
  auto [lower, upper] = trivial_bounds(dec);
  for (std::size_t k = lower; k <= std::min(inst.budget, upper); ++k) {
    if (auto seed = detail::decide_with(inst, dec, k, opts.jobs)) return seed;
  }
  return std::nullopt;
}

}  // namespace tss
