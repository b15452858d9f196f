#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace tss::detail {

// Runs body(i) for i in [0, count) on up to `jobs` threads with a static
// interleaved split. Callers must merge results in an order-independent way.
template <typename Body>
void parallel_for(std::size_t count, std::size_t jobs, Body body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([=, &body] {
      for (std::size_t i = w; i < count; i += jobs) body(i);
    });
  }
}

}  // namespace tss::detail
