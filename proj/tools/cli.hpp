#pragma once

// Command-line front end. Exit codes: 0 found/true, 1 not found/false, 2 error.
// Errors print a single line "error: <kind>: <message>" on stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tss/tss.hpp"

namespace tss::cli {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text << '\n';
}

inline Instance load_instance(const std::string& path, std::optional<std::size_t> budget) {
  Instance inst = parse_instance(read_file(path));
  if (budget) inst.budget = *budget;
  return inst;
}

inline json trace_to_json(const ActivationTrace& trace) {
  json j;
  j["rounds"] = trace.rounds;
  j["successful"] = trace.successful;
  return j;
}

inline json partition_to_json(const TypePartition& p) {
  json j;
  j["nd"] = p.size();
  j["groups"] = p.groups;
  json kinds = json::array();
  for (auto k : p.kinds) kinds.push_back(to_string(k));
  j["kinds"] = std::move(kinds);
  json edges = json::array();
  for (auto [a, b] : p.type_graph.edges()) edges.push_back({a, b});
  j["type_edges"] = std::move(edges);
  json thresholds = json::array();
  for (const auto& t : p.group_threshold) thresholds.push_back(t ? json(*t) : json(nullptr));
  j["group_thresholds"] = std::move(thresholds);
  return j;
}

inline json twin_decomposition_to_json(const TwinDecomposition& dec) {
  json j;
  j["tc"] = dec.cover_size();
  j["cover"] = dec.cover;
  json cliques = json::array();
  for (std::size_t c = 0; c < dec.cliques.size(); ++c) {
    json jc;
    jc["vertices"] = dec.cliques[c];
    jc["neighborhood"] = dec.clique_neighborhood[c];
    jc["threshold"] = dec.clique_threshold[c];
    jc["deficit"] = dec.deficit[c];
    jc["size_class"] = dec.is_big(c) ? "big" : "small";
    cliques.push_back(std::move(jc));
  }
  j["cliques"] = std::move(cliques);
  auto [lower, upper] = trivial_bounds(dec);
  j["bounds"] = {lower, upper};
  return j;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Target set selection toolkit"};
  app.require_subcommand(1);

  std::string instance_path, seed_path, algo = "bruteforce", param = "nd";
  std::optional<std::size_t> budget;
  std::size_t jobs = 1, max_types = 8, max_cover = 8, cap = kBruteForceDefaultCap;

  auto* solve = app.add_subcommand("solve", "Find a minimum target set within the budget");
  solve->add_option("--algo", algo)->check(CLI::IsMember({"bruteforce", "nd", "twincover"}));
  solve->add_option("--budget", budget, "Override the instance budget");
  solve->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  solve->add_option("--max-types", max_types, "Refuse nd solving above this many types");
  solve->add_option("--max-cover", max_cover, "Refuse twin-cover solving above this cover size");
  solve->add_option("--cap", cap, "Largest n accepted by brute force");
  solve->add_option("instance", instance_path)->required();

  auto* verify = app.add_subcommand("verify", "Check that a seed is a target set within the budget");
  verify->add_option("--budget", budget);
  verify->add_option("instance", instance_path)->required();
  verify->add_option("seed", seed_path)->required();

  auto* simulate_cmd = app.add_subcommand("simulate", "Print the activation trace of a seed");
  simulate_cmd->add_option("instance", instance_path)->required();
  simulate_cmd->add_option("seed", seed_path)->required();

  auto* decompose = app.add_subcommand("decompose", "Neighborhood-diversity types or minimum twin cover");
  decompose->add_option("--param", param)->check(CLI::IsMember({"nd", "tc"}));
  decompose->add_option("--max-cover", max_cover);
  decompose->add_option("graph", instance_path)->required();

  std::string mcq_path, out_path, map_path;
  bool literal = false;
  std::optional<std::size_t> multiplier;
  auto* reduce = app.add_subcommand("reduce", "Compile a multicolored clique instance to target set selection");
  reduce->add_option("mcq", mcq_path)->required();
  reduce->add_option("--out", out_path, "Reduced instance (stdout when omitted)");
  reduce->add_option("--map", map_path, "Group layout and encodings");
  auto* literal_flag = reduce->add_flag("--literal-multiplier", literal, "Use q = n^2 even when n = 1");
  reduce->add_option("--multiplier", multiplier, "Edge encoding multiplier q")->check(CLI::PositiveNumber)->excludes(literal_flag);

  std::size_t k = 3, n = 1, m = 1, types = 4, cover = 3;
  std::uint64_t rng_seed = 0;
  double p = 0.5;
  std::string model = "gnp";
  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  auto* gen_mcq = gen->add_subcommand("planted-mcq", "Regularized MCQ instance with a planted clique");
  gen_mcq->add_option("--k", k);
  gen_mcq->add_option("--n", n);
  gen_mcq->add_option("--m", m);
  gen_mcq->add_option("--seed", rng_seed);
  auto* gen_app = gen->add_subcommand("appendix", "Path on 2n vertices plus an apex on every second vertex");
  gen_app->add_option("--n", n)->required();
  auto* gen_rand = gen->add_subcommand("random", "Random majority-threshold instance");
  gen_rand->add_option("--model", model)->check(CLI::IsMember({"gnp", "nd", "tc"}));
  gen_rand->add_option("--n", n, "Vertex count (gnp) or vertex cap (nd, tc)");
  gen_rand->add_option("--p", p, "Edge probability (gnp)");
  gen_rand->add_option("--types", types, "Type count (nd)");
  gen_rand->add_option("--cover", cover, "Cover size (tc)");
  gen_rand->add_option("--budget", budget);
  gen_rand->add_option("--seed", rng_seed);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*solve) {
      Instance inst = detail::load_instance(instance_path, budget);
      std::optional<VertexSet> seed;
      if (algo == "bruteforce") {
        seed = brute_force_decide(inst, cap);
      } else if (algo == "nd") {
        seed = solve_majority_nd(inst, {max_types, jobs});
      } else {
        seed = solve_majority_tc(inst, {max_cover, jobs});
      }
      if (!seed) {
        out << "no solution\n";
        return 1;
      }
      out << seed_to_json(*seed).dump() << '\n';
      return 0;
    }
    if (*verify) {
      Instance inst = detail::load_instance(instance_path, budget);
      VertexSet seed = parse_seed(detail::read_file(seed_path));
      bool target = is_target_set(inst, seed);
      bool within = seed.size() <= inst.budget;
      json j;
      j["target_set"] = target;
      j["within_budget"] = within;
      j["size"] = seed.size();
      j["budget"] = inst.budget;
      out << j.dump() << '\n';
      return target && within ? 0 : 1;
    }
    if (*simulate_cmd) {
      Instance inst = detail::load_instance(instance_path, std::nullopt);
      VertexSet seed = parse_seed(detail::read_file(seed_path));
      out << detail::trace_to_json(simulate(inst, seed)).dump() << '\n';
      return 0;
    }
    if (*decompose) {
      Instance inst = detail::load_instance(instance_path, std::nullopt);
      if (param == "nd") {
        out << detail::partition_to_json(neighborhood_partition(inst)).dump() << '\n';
      } else {
        out << detail::twin_decomposition_to_json(minimum_twin_cover(inst.graph, max_cover)).dump() << '\n';
      }
      return 0;
    }
    if (*reduce) {
      McqInstance mcq = parse_mcq(detail::read_file(mcq_path));
      ReductionOptions opts;
      opts.literal_multiplier = literal;
      opts.multiplier = multiplier;
      ReductionArtifact art = reduce_mcq_to_tss(mcq, opts);
      std::string text = serialize_instance(art.instance);
      if (out_path.empty())
        out << text << '\n';
      else
        detail::write_file(out_path, text);
      if (!map_path.empty()) detail::write_file(map_path, artifact_map_to_json(art).dump());
      return 0;
    }
    if (*gen_mcq) {
      PlantedMcq pm = gen_planted_mcq(k, n, m, rng_seed);
      json j = mcq_to_json(pm.instance);
      j["planted"] = selection_to_json(pm.planted);
      out << j.dump() << '\n';
      return 0;
    }
    if (*gen_app) {
      out << serialize_instance(gen_appendix_family(n)) << '\n';
      return 0;
    }
    if (*gen_rand) {
      Rng rng(rng_seed);
      Graph g;
      if (model == "gnp")
        g = random_gnp(n, p, rng);
      else if (model == "nd")
        g = random_type_blowup(types, n, rng);
      else
        g = random_twin_cover_graph(cover, n, rng);
      std::size_t k_budget = budget.value_or(g.vertex_count());
      out << serialize_instance(Instance::majority(std::move(g), k_budget)) << '\n';
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: precondition: " << e.what() << '\n';
    return 2;
  } catch (const LimitExceeded& e) {
    err << "error: limit: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: invalid: " << e.what() << '\n';
    return 2;
  }
  err << "error: usage: no subcommand\n";
  return 2;
}

}  // namespace tss::cli
