// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <atomic>
#include <bit>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"
#include "gadget_checks.hpp"
#include "oracles.hpp"
#include "tss/tss.hpp"

namespace {

using namespace tss;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "tss_acceptance";
  std::filesystem::create_directories(dir);
  return dir;
}

// Runs `tss solve` in-process and returns the reported seed size.
std::optional<std::size_t> cli_solve_size(const Instance& inst, const std::string& algo) {
  auto path = scratch_dir() / ("instance_" + algo + ".json");
  std::ofstream(path) << serialize_instance(inst);
  std::ostringstream out, err;
  int code = cli::run({"solve", "--algo", algo, path.string()}, out, err);
  if (code != 0) return std::nullopt;
  return json::parse(out.str())["size"].get<std::size_t>();
}

Outcome nd_oracle_equivalence() {
  Rng rng(20240101);
  std::size_t checked = 0;
  while (checked < 250) {
    Graph g = random_type_blowup(4, 9, rng, rng.chance(0.5) ? 0.4 : 0.7);
    Instance inst = Instance::majority(std::move(g), 9);
    if (oracle::neighborhood_diversity(inst.graph) > 4) return {false, "generator exceeded nd 4"};
    std::size_t opt = oracle::min_target_set_size(inst);
    auto got = cli_solve_size(inst, "nd");
    if (!got || *got != opt)
      return {false, "mismatch on " + serialize_instance(inst) + ": oracle " + std::to_string(opt)};
    ++checked;
  }
  return {true, std::to_string(checked) + " instances, n<=9, nd<=4"};
}

Outcome tc_oracle_equivalence() {
  Rng rng(20240102);
  std::size_t checked = 0;
  while (checked < 250) {
    Graph g = random_twin_cover_graph(rng.between(0, 3), 10, rng);
    Instance inst = Instance::majority(std::move(g), 10);
    if (oracle::min_twin_cover_size(inst.graph) > 3) return {false, "generator exceeded tc 3"};
    std::size_t opt = oracle::min_target_set_size(inst);
    auto got = cli_solve_size(inst, "twincover");
    if (!got || *got != opt)
      return {false, "mismatch on " + serialize_instance(inst) + ": oracle " + std::to_string(opt)};
    auto [lower, upper] = trivial_bounds(minimum_twin_cover(inst.graph));
    if (opt < lower || opt > upper)
      return {false, "bracket violated on " + serialize_instance(inst)};
    ++checked;
  }
  return {true, std::to_string(checked) + " instances, n<=10, tc<=3, bracket holds"};
}

Outcome selection_gadgets() {
  std::size_t checked = 0;
  for (std::size_t s = 1; s <= 3; ++s)
    for (std::size_t t = s + 1; t <= 4; ++t) {
      std::string why;
      if (!checks::selection_gadget_behaves(s, t, why)) return {false, why};
      ++checked;
    }
  return {true, std::to_string(checked) + " (s,t) pairs, all seeds"};
}

Outcome multiple_gadgets() {
  for (std::size_t q = 1; q <= 3; ++q)
    for (std::size_t s = 1; s <= 3; ++s) {
      std::string why;
      if (!checks::multiple_gadget_behaves(q, s, why)) return {false, why};
    }
  return {true, "q,s in {1,2,3}; guards and ladders active by round 3 iff q | z"};
}

// Every MCQ instance of shape (k, 1, m) on classes {0,1}, {2,3}, ...
std::vector<McqInstance> all_tiny_mcq(std::size_t k, std::size_t m) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> options;  // per pair: chosen edge lists
  std::vector<std::pair<std::size_t, std::size_t>> cells{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  for (std::uint32_t mask = 0; mask < 16; ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) == m + 1) {
      options.emplace_back();
      for (std::size_t c = 0; c < 4; ++c)
        if (mask >> c & 1) options.back().push_back(cells[c]);
    }
  const auto pairs = class_pairs(k);
  std::vector<McqInstance> out;
  std::vector<std::size_t> choice(pairs.size(), 0);
  while (true) {
    McqInstance mcq;
    mcq.k = k;
    for (std::size_t a = 0; a < k; ++a) mcq.classes.push_back({2 * a, 2 * a + 1});
    for (std::size_t p = 0; p < pairs.size(); ++p)
      for (auto [i, j] : options[choice[p]]) mcq.edges.emplace_back(2 * pairs[p].first + i, 2 * pairs[p].second + j);
    out.push_back(std::move(mcq));
    std::size_t p = 0;
    while (p < pairs.size() && ++choice[p] == options.size()) choice[p++] = 0;
    if (p == pairs.size()) break;
  }
  return out;
}

std::vector<McqInstance> reduction_family() {
  std::vector<McqInstance> family;
  for (auto [k, m] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 0}, {2, 1}, {3, 1}})
    for (auto& mcq : all_tiny_mcq(k, m)) family.push_back(std::move(mcq));
  return family;
}

Outcome reduction_iff() {
  auto family = reduction_family();
  std::size_t seeds = 0, without_clique = 0, literal_false_positives = 0;
  for (const auto& mcq : family) {
    auto art = reduce_mcq_to_tss(mcq);
    auto literal = reduce_mcq_to_tss(mcq, ReductionOptions{std::nullopt, true});
    without_clique += !has_multicolored_clique(art.mcq);
    bool ok = true;
    std::string why;
    for_each_selection(art.shape(), [&](const McqSelection& sel) {
      ++seeds;
      bool clique = is_clique(art.mcq, sel);
      VertexSet seed = seed_from_selection(art, sel);
      bool success = is_target_set(art.instance, seed);
      if (success != clique && ok) {
        ok = false;
        why = "selection mismatch on " + mcq_to_json(mcq).dump();
      }
      if (success && clique_from_seed(art, seed) != sel && ok) {
        ok = false;
        why = "decode mismatch on " + mcq_to_json(mcq).dump();
      }
      literal_false_positives += !clique && is_target_set(literal.instance, seed_from_selection(literal, sel));
    });
    if (!ok) return {false, why};
  }
  if (without_clique == 0) return {false, "family has no clique-free instance"};
  return {true, std::to_string(family.size()) + " instances (" + std::to_string(without_clique) + " clique-free), " +
                    std::to_string(seeds) + " selection seeds, q=max(n^2,n+1); q=n^2 would admit " +
                    std::to_string(literal_false_positives) + " non-clique seeds"};
}

Outcome parameter_bound() {
  std::size_t worst = 0;
  for (const auto& mcq : reduction_family()) {
    auto art = reduce_mcq_to_tss(mcq);
    const std::size_t k = art.shape().k, bound = 3 * k + 12 * pair_count(k);
    auto partition = neighborhood_partition(art.instance);
    if (partition.size() > bound)
      return {false, std::to_string(partition.size()) + " groups > " + std::to_string(bound)};
    for (auto kind : partition.kinds)
      if (kind != GroupKind::independent) return {false, "clique-kind group in " + mcq_to_json(mcq).dump()};
    worst = std::max(worst, partition.size());
  }
  return {true, "at most " + std::to_string(worst) + " groups, all independent"};
}

Outcome structural() {
  auto complete = [](std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
  };
  for (std::size_t n = 1; n <= 8; ++n)
    if (neighborhood_partition(complete(n)).size() != 1) return {false, "nd(K_" + std::to_string(n) + ") != 1"};
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = 1; b <= 4; ++b) {
      if (a + b < 3) continue;  // K_{1,1} = K_2
      std::vector<Edge> e;
      for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v) e.emplace_back(u, v);
      if (neighborhood_partition(Graph::from_edges(a + b, e)).size() != 2)
        return {false, "nd(K_{" + std::to_string(a) + "," + std::to_string(b) + "}) != 2"};
    }
  if (neighborhood_partition(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})).size() != 4) return {false, "nd(P_4) != 4"};
  for (std::size_t n = 2; n <= 4; ++n)
    if (minimum_twin_cover(gen_appendix_family(n).graph).cover_size() != n)
      return {false, "tc(G_" + std::to_string(2 * n + 1) + ") != " + std::to_string(n)};

  std::atomic<std::size_t> graphs{0};
  std::atomic<bool> ok{true};
  std::mutex mu;
  std::string why;
  for (std::size_t n = 0; n <= 7; ++n) {
    const std::uint64_t codes = std::uint64_t{1} << (n * (n ? n - 1 : 0) / 2);
    const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back([&, w] {
        for (std::uint64_t code = w; code < codes && ok; code += jobs) {
          Graph g = oracle::graph_from_code(n, code);
          if (minimum_twin_cover(g).cover_size() != oracle::min_twin_cover_size(g)) {
            std::lock_guard lock(mu);
            ok = false;
            why = "twin cover mismatch on n=" + std::to_string(n) + " code=" + std::to_string(code);
          }
          ++graphs;
        }
      });
  }
  if (!ok) return {false, why};
  return {true, "nd examples, tc(G_5,G_7,G_9)=2,3,4, " + std::to_string(graphs.load()) +
                    " labeled graphs on <=7 vertices"};
}

Outcome appendix_family() {
  // Terminal rounds of the apex seed, frozen from the simulator for n = 2, 3, 4.
  const std::size_t golden[] = {4, 6, 8};
  bool pass = true;
  std::ostringstream detail;
  std::size_t previous = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    Instance inst = gen_appendix_family(n);
    auto trace = simulate(inst, {appendix_apex(n)});
    if (!trace.successful) {
      pass = false;
      detail << "n=" << n << ": apex is not a target set; ";
    }
    if (trace.terminal_round() != golden[n - 2]) {
      pass = false;
      detail << "n=" << n << ": terminal round " << trace.terminal_round() << " != golden " << golden[n - 2] << "; ";
    }
    if (n > 2 && !(trace.terminal_round() > previous)) {
      pass = false;
      detail << "n=" << n << ": terminal round did not grow; ";
    }
    previous = trace.terminal_round();
    std::vector<Vertex> others;
    for (Vertex v = 0; v < inst.size(); ++v)
      if (v != appendix_apex(n) && is_target_set(inst, {v})) others.push_back(v);
    if (!others.empty()) {
      pass = false;
      detail << "n=" << n << ": other singleton target sets {";
      for (std::size_t i = 0; i < others.size(); ++i) detail << (i ? "," : "") << others[i];
      detail << "}; ";
    }
  }
  if (pass) detail << "apex rounds 4,6,8; no other singleton";
  return {pass, detail.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 nd solver matches brute force", nd_oracle_equivalence},
      {"2 twin-cover solver matches brute force", tc_oracle_equivalence},
      {"3 selection gadgets", selection_gadgets},
      {"4 multiple gadgets", multiple_gadgets},
      {"5 reduction: seed succeeds iff clique", reduction_iff},
      {"6 reduced graph has few independent types", parameter_bound},
      {"7 structural computations", structural},
      {"8 appendix family", appendix_family},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.name << " (" << o.detail << ") [" << std::fixed
              << std::setprecision(1) << secs << "s]" << std::endl;
    failures += !o.pass;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
