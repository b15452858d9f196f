#pragma once

// Target set selection for thresholds that are constant on every neighborhood
// type. For each ordering of the types an integer program describes a process
// that activates the types in that order; the best verified solution wins.

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <vector>

#include "tss/activation.hpp"
#include "tss/decompose.hpp"
#include "tss/parallel.hpp"

namespace tss {

// Covering program for one ordering. For every group C:
//
//   fixed_C + sum_{D later, D ~ C} x_D + [C clique] x_C + f'(C) y_C >= f'(C)
//   n_C y_C <= x_C <= n_C,  y_C in {0,1}
//
// where fixed_C = sum of n_D over type-graph neighbors D placed before C.
struct OrderingProgram {
  struct Constraint {
    std::size_t fixed = 0;
    std::vector<std::size_t> later_neighbors;
    bool counts_self = false;
    Threshold demand = 0;
  };

  std::vector<std::size_t> ordering;   // ordering[pos] = group
  std::vector<std::size_t> position;   // position[group] = pos
  std::vector<std::size_t> capacity;   // n_C
  std::vector<Constraint> constraints;  // indexed by group
  // Whether y_C = 1 is allowed. Always true for programs built from a partition.
  std::vector<char> allow_full;

  std::size_t group_count() const { return ordering.size(); }
};

struct ProgramSolution {
  std::vector<std::size_t> x;  // indexed by group
  std::vector<char> y;
  std::size_t objective = 0;
};

inline OrderingProgram build_ordering_program(const TypePartition& partition,
                                              std::span<const std::size_t> ordering) {
  const std::size_t t = partition.size();
  if (!partition.thresholds_uniform())
    throw PreconditionError("thresholds are not constant on every neighborhood type");
  if (ordering.size() != t) throw InvalidArgument("ordering length does not match group count");

  OrderingProgram prog;
  prog.ordering.assign(ordering.begin(), ordering.end());
  prog.position.assign(t, t);
  for (std::size_t pos = 0; pos < t; ++pos) {
    if (ordering[pos] >= t || prog.position[ordering[pos]] != t)
      throw InvalidArgument("ordering is not a permutation of the groups");
    prog.position[ordering[pos]] = pos;
  }
  prog.capacity.resize(t);
  prog.constraints.resize(t);
  prog.allow_full.assign(t, 1);
  for (std::size_t c = 0; c < t; ++c) {
    prog.capacity[c] = partition.group_size(c);
    auto& con = prog.constraints[c];
    con.demand = *partition.group_threshold[c];
    con.counts_self = partition.kinds[c] == GroupKind::clique;
    for (Vertex d : partition.type_graph.neighbors(c)) {
      if (prog.position[d] < prog.position[c])
        con.fixed += partition.group_size(d);
      else
        con.later_neighbors.push_back(d);
    }
  }
  return prog;
}

namespace detail {

// Exact depth-first search over groups from the last ordering position to the
// first. When group C is reached every variable of its constraint except x_C is
// known, so its feasible range is exact; values above the largest residual
// demand of an earlier constraint are dominated and skipped.
class ProgramSearch {
 public:
  explicit ProgramSearch(const OrderingProgram& prog) : prog_(prog), x_(prog.group_count(), 0) {
    const std::size_t t = prog.group_count();
    earlier_dependents_.resize(t);
    for (std::size_t e = 0; e < t; ++e)
      for (std::size_t d : prog.constraints[e].later_neighbors) earlier_dependents_[d].push_back(e);
  }

  std::optional<ProgramSolution> run() {
    best_objective_ = std::numeric_limits<std::size_t>::max();
    found_ = false;
    descend(prog_.group_count(), 0);
    if (!found_) return std::nullopt;
    ProgramSolution sol;
    sol.x = best_x_;
    sol.y.resize(sol.x.size());
    for (std::size_t c = 0; c < sol.x.size(); ++c) {
      sol.y[c] = sol.x[c] == prog_.capacity[c] && prog_.allow_full[c] &&
                 !satisfied_without_full(c, sol.x);
      sol.objective += sol.x[c];
    }
    return sol;
  }

 private:
  // LHS of C's constraint without the y term, counting only assigned later groups.
  std::size_t coverage(std::size_t c, std::span<const std::size_t> x) const {
    const auto& con = prog_.constraints[c];
    std::size_t s = con.fixed;
    for (std::size_t d : con.later_neighbors) s += x[d];
    if (con.counts_self) s += x[c];
    return s;
  }

  bool satisfied_without_full(std::size_t c, std::span<const std::size_t> x) const {
    return coverage(c, x) >= prog_.constraints[c].demand;
  }

  std::size_t residual(std::size_t c) const {
    const auto& con = prog_.constraints[c];
    std::size_t s = con.fixed;
    for (std::size_t d : con.later_neighbors) s += x_[d];
    return con.demand > s ? con.demand - s : 0;
  }

  // Admissible bound on the cost of groups at positions < pos.
  std::size_t lower_bound(std::size_t pos) const {
    std::size_t lb = 0;
    for (std::size_t p = 0; p < pos; ++p) {
      std::size_t e = prog_.ordering[p];
      std::size_t r = residual(e);
      if (prog_.allow_full[e]) r = std::min(r, prog_.capacity[e]);
      lb = std::max(lb, r);
    }
    return lb;
  }

  bool better(std::size_t objective) const {
    if (!found_ || objective < best_objective_) return true;
    if (objective > best_objective_) return false;
    for (std::size_t c : prog_.ordering) {
      if (x_[c] != best_x_[c]) return x_[c] < best_x_[c];
    }
    return false;
  }

  void descend(std::size_t pos, std::size_t cost) {
    if (found_ && cost + lower_bound(pos) > best_objective_) return;
    if (pos == 0) {
      if (better(cost)) {
        best_x_ = x_;
        best_objective_ = cost;
        found_ = true;
      }
      return;
    }
    const std::size_t c = prog_.ordering[pos - 1];
    const auto& con = prog_.constraints[c];
    const std::size_t cap = prog_.capacity[c];
    const std::size_t r = residual(c);

    std::size_t lo;
    bool feasible = true;
    if (r == 0) {
      lo = 0;
    } else if (con.counts_self && r <= cap) {
      lo = r;
    } else if (prog_.allow_full[c]) {
      lo = cap;
    } else {
      feasible = false;
      lo = 0;
    }
    if (!feasible) return;

    std::size_t useful = 0;
    for (std::size_t e : earlier_dependents_[c]) useful = std::max(useful, residual(e));
    std::size_t hi = std::max(lo, std::min(cap, useful));

    for (std::size_t v = lo; v <= hi; ++v) {
      x_[c] = v;
      descend(pos - 1, cost + v);
    }
    x_[c] = 0;
  }

  const OrderingProgram& prog_;
  std::vector<std::vector<std::size_t>> earlier_dependents_;
  std::vector<std::size_t> x_;
  std::vector<std::size_t> best_x_;
  std::size_t best_objective_ = 0;
  bool found_ = false;
};

}  // namespace detail

// Minimum of sum x_C; ties broken by the smallest x vector read in ordering order.
inline std::optional<ProgramSolution> solve_integer_program(const OrderingProgram& prog) {
  return detail::ProgramSearch(prog).run();
}

// x_C lowest-indexed vertices of every group.
inline VertexSet materialize_seed(const TypePartition& partition, std::span<const std::size_t> x) {
  VertexSet seed;
  for (std::size_t c = 0; c < partition.size(); ++c)
    seed.insert(seed.end(), partition.groups[c].begin(), partition.groups[c].begin() + x[c]);
  return normalized(std::move(seed));
}

struct NdOptions {
  std::size_t max_types = 8;
  std::size_t jobs = 1;
};

// Smallest verified seed over all orderings, lexicographically smallest among
// equal sizes. Independent of the budget and of opts.jobs.
inline VertexSet nd_minimum_target_set(const Instance& inst, const NdOptions& opts = {}) {
  TypePartition partition = neighborhood_partition(inst);
  if (!partition.thresholds_uniform())
    throw PreconditionError("thresholds are not constant on every neighborhood type");
  const std::size_t t = partition.size();
  if (t > opts.max_types) {
    throw LimitExceeded("neighborhood diversity " + std::to_string(t) + " exceeds --max-types " +
                        std::to_string(opts.max_types));
  }

  std::vector<std::vector<std::size_t>> orderings;
  std::vector<std::size_t> perm(t);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    orderings.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::mutex mu;
  std::optional<VertexSet> best;
  auto offer = [&](VertexSet seed) {
    std::lock_guard lock(mu);
    if (!best || seed.size() < best->size() || (seed.size() == best->size() && seed < *best))
      best = std::move(seed);
  };

  detail::parallel_for(orderings.size(), opts.jobs, [&](std::size_t i) {
    OrderingProgram prog = build_ordering_program(partition, orderings[i]);
    auto sol = solve_integer_program(prog);
    if (!sol) return;
    VertexSet seed = materialize_seed(partition, sol->x);
    if (is_target_set(inst, seed)) offer(std::move(seed));
  });

  // The all-full assignment is feasible for every ordering and is always a target set.
  return *best;
}

inline std::optional<VertexSet> solve_majority_nd(const Instance& inst, const NdOptions& opts = {}) {
  VertexSet best = nd_minimum_target_set(inst, opts);
  if (best.size() > inst.budget) return std::nullopt;
  return best;
}

}  // namespace tss
