#pragma once

// Exhaustive reference solver. Ground truth for the structural solvers.

#include <numeric>
#include <optional>

#include "tss/activation.hpp"

namespace tss {

inline constexpr std::size_t kBruteForceDefaultCap = 24;

namespace detail {

inline void check_cap(const Instance& inst, std::size_t cap) {
  if (inst.size() > cap) {
    throw LimitExceeded("brute force refuses n=" + std::to_string(inst.size()) + " (cap " +
                        std::to_string(cap) + ")");
  }
}

// Visits the k-subsets of {0..n-1} in lexicographic order until visit returns true.
template <typename Visit>
std::optional<VertexSet> first_subset(std::size_t n, std::size_t k, Visit visit) {
  if (k > n) return std::nullopt;
  VertexSet s(k);
  std::iota(s.begin(), s.end(), Vertex{0});
  while (true) {
    if (visit(s)) return s;
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return std::nullopt;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

// Smallest target set of size at most max_size, searched by ascending size.
inline std::optional<VertexSet> smallest_target_set_up_to(const Instance& inst, std::size_t max_size) {
  for (std::size_t k = 0; k <= std::min(max_size, inst.size()); ++k) {
    auto found = first_subset(inst.size(), k, [&](const VertexSet& s) { return is_target_set(inst, s); });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace detail

// Minimum-cardinality target set, lexicographically smallest among those. The
// budget is ignored; callers compare the size themselves.
inline VertexSet brute_force_min_target_set(const Instance& inst, std::size_t cap = kBruteForceDefaultCap) {
  detail::check_cap(inst, cap);
  // S = V always succeeds, so this never comes back empty.
  return *detail::smallest_target_set_up_to(inst, inst.size());
}

inline std::optional<VertexSet> brute_force_decide(const Instance& inst,
                                                   std::size_t cap = kBruteForceDefaultCap) {
  detail::check_cap(inst, cap);
  return detail::smallest_target_set_up_to(inst, inst.budget);
}

}  // namespace tss
