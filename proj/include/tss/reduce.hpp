#pragma once

// Compiles regularized k-Multicolored-Clique instances into target set selection
// instances whose neighborhood diversity is O(k^2), and translates solutions in
// both directions.
//
// Layout per color class a:   L[a]      selection gadget L(n, n+1)
// Layout per pair a < b:      M[a,b]    multiple gadget with q, s = m (inner L(qm, qm+1))
//                             I[a:a,b]  incident gadget between L[a] and M[a,b]
//                             I[b:a,b]  incident gadget between L[b] and M[a,b]
//
// Vertex v_i of class a is encoded by i seeds in L[a]-up and n-i in L[a]-down;
// edge e_j of E_ab by qj seeds in L[a,b]-up and q(m-j) in L[a,b]-down.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "tss/activation.hpp"
#include "tss/graph.hpp"

namespace tss {

// ---------------------------------------------------------------------------
// Multicolored clique instances

struct McqInstance {
  std::size_t k = 0;
  // classes[a][i] is the vertex id of v_i in color class a.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// One vertex position per class and one edge position per class pair (a < b in
// lexicographic pair order).
struct McqSelection {
  std::vector<std::size_t> vertex;
  std::vector<std::size_t> edge;

  friend bool operator==(const McqSelection&, const McqSelection&) = default;
};

// Regularized form: n+1 vertices per class, m+1 edges per class pair.
struct McqShape {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t m = 0;
};

inline std::size_t pair_count(std::size_t k) { return k * (k - 1) / 2; }

// Index of the pair (a, b), a < b, in lexicographic order.
inline std::size_t pair_index(std::size_t k, std::size_t a, std::size_t b) {
  return a * k - a * (a + 1) / 2 + (b - a - 1);
}

inline std::vector<std::pair<std::size_t, std::size_t>> class_pairs(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) out.emplace_back(a, b);
  return out;
}

// Indexed view of a validated instance.
struct McqIndex {
  McqShape shape;
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> where;  // id -> (class, position)
  // Per pair: edges as (position in V_a, position in V_b), sorted by endpoint ids.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pair_edges;
};

// Throws InvalidArgument naming the violated condition.
inline McqIndex index_mcq(const McqInstance& mcq) {
  if (mcq.k < 2) throw InvalidArgument("mcq: k must be at least 2");
  if (mcq.classes.size() != mcq.k)
    throw InvalidArgument("mcq: expected " + std::to_string(mcq.k) + " classes, got " +
                          std::to_string(mcq.classes.size()));
  McqIndex idx;
  const std::size_t class_size = mcq.classes[0].size();
  if (class_size == 0) throw InvalidArgument("mcq: empty color class");
  for (std::size_t a = 0; a < mcq.k; ++a) {
    if (mcq.classes[a].size() != class_size)
      throw InvalidArgument("mcq: non-uniform class sizes (class 0 has " + std::to_string(class_size) +
                            ", class " + std::to_string(a) + " has " + std::to_string(mcq.classes[a].size()) + ")");
    for (std::size_t i = 0; i < class_size; ++i) {
      auto [it, fresh] = idx.where.emplace(mcq.classes[a][i], std::make_pair(a, i));
      if (!fresh) throw InvalidArgument("mcq: vertex " + std::to_string(mcq.classes[a][i]) + " appears twice");
    }
  }

  const std::size_t pairs = pair_count(mcq.k);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_ids(pairs);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [u, v] : mcq.edges) {
    auto iu = idx.where.find(u), iv = idx.where.find(v);
    if (iu == idx.where.end() || iv == idx.where.end())
      throw InvalidArgument("mcq: edge [" + std::to_string(u) + "," + std::to_string(v) +
                            "] uses a vertex outside every class");
    auto [a, i] = iu->second;
    auto [b, j] = iv->second;
    if (a == b)
      throw InvalidArgument("mcq: intra-class edge [" + std::to_string(u) + "," + std::to_string(v) +
                            "] in class " + std::to_string(a));
    if (a > b) {
      std::swap(a, b);
      std::swap(u, v);
    }
    if (!seen.emplace(u, v).second)
      throw InvalidArgument("mcq: duplicate edge [" + std::to_string(u) + "," + std::to_string(v) + "]");
    by_ids[pair_index(mcq.k, a, b)].emplace_back(u, v);
  }
  const std::size_t edges_per_pair = by_ids[0].size();
  if (edges_per_pair == 0) throw InvalidArgument("mcq: class pair (0,1) has no edges");
  idx.pair_edges.resize(pairs);
  for (std::size_t p = 0; p < pairs; ++p) {
    if (by_ids[p].size() != edges_per_pair)
      throw InvalidArgument("mcq: non-uniform cross-edge counts (pair 0 has " + std::to_string(edges_per_pair) +
                            ", pair " + std::to_string(p) + " has " + std::to_string(by_ids[p].size()) + ")");
    std::sort(by_ids[p].begin(), by_ids[p].end());
    for (auto [u, v] : by_ids[p]) idx.pair_edges[p].emplace_back(idx.where[u].second, idx.where[v].second);
  }
  idx.shape = {mcq.k, class_size - 1, edges_per_pair - 1};
  return idx;
}

inline void validate_mcq(const McqInstance& mcq) { (void)index_mcq(mcq); }

// Whether the selection picks a clique: every chosen edge joins the chosen endpoints.
inline bool is_clique(const McqIndex& idx, const McqSelection& sel) {
  const auto& [k, n, m] = idx.shape;
  if (sel.vertex.size() != k || sel.edge.size() != pair_count(k)) return false;
  for (auto [a, b] : class_pairs(k)) {
    std::size_t p = pair_index(k, a, b);
    if (sel.edge[p] > m || sel.vertex[a] > n || sel.vertex[b] > n) return false;
    auto [i, j] = idx.pair_edges[p][sel.edge[p]];
    if (i != sel.vertex[a] || j != sel.vertex[b]) return false;
  }
  return true;
}

// Whether the vertex positions (one per class) span a clique of the MCQ graph.
inline std::optional<McqSelection> clique_on_vertices(const McqIndex& idx, std::span<const std::size_t> vertex) {
  McqSelection sel;
  sel.vertex.assign(vertex.begin(), vertex.end());
  for (auto [a, b] : class_pairs(idx.shape.k)) {
    const auto& edges = idx.pair_edges[pair_index(idx.shape.k, a, b)];
    auto it = std::find(edges.begin(), edges.end(), std::make_pair(vertex[a], vertex[b]));
    if (it == edges.end()) return std::nullopt;
    sel.edge.push_back(static_cast<std::size_t>(it - edges.begin()));
  }
  return sel;
}

inline bool has_multicolored_clique(const McqIndex& idx) {
  const auto& [k, n, m] = idx.shape;
  std::vector<std::size_t> choice(k, 0);
  while (true) {
    if (clique_on_vertices(idx, choice)) return true;
    std::size_t a = 0;
    while (a < k && ++choice[a] > n) choice[a++] = 0;
    if (a == k) return false;
  }
}

// ---------------------------------------------------------------------------
// Gadget layout

struct GadgetGroup {
  std::string name;
  Vertex first = 0;
  std::size_t size = 0;
  // Per-vertex thresholds; ignored when threshold_is_degree is set.
  std::vector<Threshold> thresholds;
  bool threshold_is_degree = false;

  Vertex vertex(std::size_t i) const { return first + i; }
};

class GadgetLayout {
 public:
  std::size_t add_group(std::string name, std::size_t size, std::vector<Threshold> thresholds) {
    groups_.push_back({std::move(name), vertex_count_, size, std::move(thresholds), false});
    vertex_count_ += size;
    return groups_.size() - 1;
  }

  // Threshold of every vertex equals its degree in the assembled graph.
  std::size_t add_degree_group(std::string name, std::size_t size) {
    groups_.push_back({std::move(name), vertex_count_, size, {}, true});
    vertex_count_ += size;
    return groups_.size() - 1;
  }

  // Complete bipartite connection between two groups.
  void join(std::size_t a, std::size_t b) { wiring_.emplace_back(a, b); }

  const std::vector<GadgetGroup>& groups() const { return groups_; }
  const GadgetGroup& group(std::size_t g) const { return groups_.at(g); }
  const std::vector<std::pair<std::size_t, std::size_t>>& wiring() const { return wiring_; }
  std::size_t vertex_count() const { return vertex_count_; }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t g = 0; g < groups_.size(); ++g)
      if (groups_[g].name == name) return g;
    return std::nullopt;
  }

  VertexSet vertices(std::size_t g) const {
    VertexSet out(groups_[g].size);
    std::iota(out.begin(), out.end(), groups_[g].first);
    return out;
  }

  Instance assemble(std::size_t budget) const {
    std::vector<Edge> edges;
    for (auto [a, b] : wiring_)
      for (std::size_t i = 0; i < groups_[a].size; ++i)
        for (std::size_t j = 0; j < groups_[b].size; ++j) edges.emplace_back(groups_[a].vertex(i), groups_[b].vertex(j));
    Graph g = Graph::from_edges(vertex_count_, edges);
    ThresholdMap f(vertex_count_, 0);
    for (const auto& grp : groups_)
      for (std::size_t i = 0; i < grp.size; ++i)
        f[grp.vertex(i)] = grp.threshold_is_degree ? g.degree(grp.vertex(i)) : grp.thresholds[i];
    return Instance(std::move(g), std::move(f), budget);
  }

 private:
  std::vector<GadgetGroup> groups_;
  std::vector<std::pair<std::size_t, std::size_t>> wiring_;
  std::size_t vertex_count_ = 0;
};

struct SelectionGadget {
  std::size_t up = 0, down = 0, guard = 0;
};

struct MultipleGadget {
  SelectionGadget inner;
  std::size_t up = 0, down = 0, guard = 0;
};

struct IncidentGadget {
  std::size_t up = 0, down = 0, guard = 0;
};

// L(s, t): selection part up/down of size s (threshold = degree), guard of size t
// with threshold s joined to both halves.
inline SelectionGadget add_selection_gadget(GadgetLayout& layout, const std::string& name, std::size_t s,
                                            std::size_t t) {
  if (t <= s) throw InvalidArgument("selection gadget needs t > s (got s=" + std::to_string(s) + ", t=" + std::to_string(t) + ")");
  SelectionGadget sg;
  sg.up = layout.add_degree_group(name + "-up", s);
  sg.down = layout.add_degree_group(name + "-down", s);
  sg.guard = layout.add_group(name + "-guard", t, std::vector<Threshold>(t, s));
  layout.join(sg.guard, sg.up);
  layout.join(sg.guard, sg.down);
  return sg;
}

// M(q, s): inner L(qs, qs+1); M-up/M-down of size s with thresholds q*1..q*s;
// M-guard of size qs with threshold s.
inline MultipleGadget add_multiple_gadget(GadgetLayout& layout, const std::string& inner_name,
                                          const std::string& name, std::size_t q, std::size_t s) {
  MultipleGadget mg;
  mg.inner = add_selection_gadget(layout, inner_name, q * s, q * s + 1);
  std::vector<Threshold> ladder(s);
  for (std::size_t i = 0; i < s; ++i) ladder[i] = q * (i + 1);
  mg.up = layout.add_group(name + "-up", s, ladder);
  mg.down = layout.add_group(name + "-down", s, ladder);
  mg.guard = layout.add_group(name + "-guard", q * s, std::vector<Threshold>(q * s, s));
  layout.join(mg.up, mg.inner.up);
  layout.join(mg.down, mg.inner.down);
  layout.join(mg.guard, mg.up);
  layout.join(mg.guard, mg.down);
  return mg;
}

inline GadgetLayout build_selection_gadget(std::size_t s, std::size_t t) {
  if (s < 1) throw InvalidArgument("selection gadget needs s >= 1");
  GadgetLayout layout;
  add_selection_gadget(layout, "L", s, t);
  return layout;
}

inline GadgetLayout build_multiple_gadget(std::size_t q, std::size_t s) {
  if (q < 1 || s < 1) throw InvalidArgument("multiple gadget needs q >= 1 and s >= 1");
  GadgetLayout layout;
  add_multiple_gadget(layout, "L", "M", q, s);
  return layout;
}

// ---------------------------------------------------------------------------
// The reduction

struct ReductionOptions {
  // Multiplier q of the edge encoding. Default max(n^2, n+1): the incident check
  // needs i + qj to be injective over i in [0,n], which q = n^2 misses at n = 1.
  std::optional<std::size_t> multiplier;
  // Use q = n^2 exactly (overridden by an explicit multiplier).
  bool literal_multiplier = false;
};

inline std::size_t default_multiplier(std::size_t n) { return std::max(n * n, n + 1); }

struct ReductionArtifact {
  Instance instance;
  GadgetLayout layout;
  McqIndex mcq;
  std::size_t q = 0;
  std::vector<SelectionGadget> class_gadget;       // per class
  std::vector<MultipleGadget> edge_gadget;          // per pair
  std::vector<IncidentGadget> incident_low;         // I[a:a,b] per pair
  std::vector<IncidentGadget> incident_high;        // I[b:a,b] per pair

  const McqShape& shape() const { return mcq.shape; }
  std::size_t budget() const { return instance.budget; }
};

inline std::size_t reduction_budget(const McqShape& s, std::size_t q) { return s.k * s.n + pair_count(s.k) * q * s.m; }

inline ReductionArtifact reduce_mcq_to_tss(const McqInstance& mcq, const ReductionOptions& opts = {}) {
  ReductionArtifact art;
  art.mcq = index_mcq(mcq);
  const auto [k, n, m] = art.mcq.shape;
  art.q = opts.multiplier.value_or(opts.literal_multiplier ? n * n : default_multiplier(n));
  if (art.q == 0) throw InvalidArgument("multiplier must be positive");
  const std::size_t q = art.q;
  GadgetLayout& layout = art.layout;

  for (std::size_t a = 0; a < k; ++a)
    art.class_gadget.push_back(add_selection_gadget(layout, "L[" + std::to_string(a) + "]", n, n + 1));

  for (auto [a, b] : class_pairs(k)) {
    std::string ab = std::to_string(a) + "," + std::to_string(b);
    const std::size_t p = art.edge_gadget.size();
    art.edge_gadget.push_back(add_multiple_gadget(layout, "L[" + ab + "]", "M[" + ab + "]", q, m));
    const auto& edges = art.mcq.pair_edges[p];

    auto incident = [&](std::size_t cls, bool low_side) {
      std::string name = "I[" + std::to_string(cls) + ":" + ab + "]";
      std::vector<Threshold> up(m + 1), down(m + 1);
      for (std::size_t l = 0; l <= m; ++l) {
        std::size_t i = low_side ? edges[l].first : edges[l].second;
        up[l] = i + q * l;
        down[l] = (n - i) + q * (m - l);
      }
      IncidentGadget ig;
      ig.up = layout.add_group(name + "-up", m + 1, up);
      ig.down = layout.add_group(name + "-down", m + 1, down);
      ig.guard = layout.add_group(name + "-guard", n + q * m, std::vector<Threshold>(n + q * m, m + 2));
      layout.join(ig.guard, ig.up);
      layout.join(ig.guard, ig.down);
      layout.join(ig.up, art.class_gadget[cls].up);
      layout.join(ig.up, art.edge_gadget[p].inner.up);
      layout.join(ig.down, art.class_gadget[cls].down);
      layout.join(ig.down, art.edge_gadget[p].inner.down);
      return ig;
    };
    art.incident_low.push_back(incident(a, true));
    art.incident_high.push_back(incident(b, false));
  }
  art.instance = layout.assemble(reduction_budget(art.mcq.shape, q));
  return art;
}

// Encodes any selection (clique or not) as a seed of size k'.
inline VertexSet seed_from_selection(const ReductionArtifact& art, const McqSelection& sel) {
  const auto [k, n, m] = art.shape();
  if (sel.vertex.size() != k || sel.edge.size() != pair_count(k))
    throw InvalidArgument("selection has wrong arity");
  VertexSet seed;
  auto take = [&](std::size_t group, std::size_t count) {
    const auto& g = art.layout.group(group);
    for (std::size_t i = 0; i < count; ++i) seed.push_back(g.vertex(i));
  };
  for (std::size_t a = 0; a < k; ++a) {
    if (sel.vertex[a] > n) throw InvalidArgument("selection: vertex position out of range");
    take(art.class_gadget[a].up, sel.vertex[a]);
    take(art.class_gadget[a].down, n - sel.vertex[a]);
  }
  for (std::size_t p = 0; p < pair_count(k); ++p) {
    if (sel.edge[p] > m) throw InvalidArgument("selection: edge position out of range");
    take(art.edge_gadget[p].inner.up, art.q * sel.edge[p]);
    take(art.edge_gadget[p].inner.down, art.q * (m - sel.edge[p]));
  }
  return normalized(std::move(seed));
}

inline VertexSet seed_from_clique(const ReductionArtifact& art, const McqSelection& clique) {
  if (!is_clique(art.mcq, clique)) throw InvalidArgument("selection is not a clique of the MCQ instance");
  return seed_from_selection(art, clique);
}

// Reads the selection back from per-gadget up-counts. Returns nullopt when the
// seed is not a target set or does not have the canonical shape.
inline std::optional<McqSelection> clique_from_seed(const ReductionArtifact& art, const VertexSet& seed) {
  if (seed.size() != art.budget())
    throw InvalidArgument("seed has size " + std::to_string(seed.size()) + ", expected k'=" +
                          std::to_string(art.budget()));
  if (!is_target_set(art.instance, seed)) return std::nullopt;
  const auto [k, n, m] = art.shape();
  auto count_in = [&](std::size_t group) {
    const auto& g = art.layout.group(group);
    return static_cast<std::size_t>(
        std::count_if(seed.begin(), seed.end(), [&](Vertex v) { return v >= g.first && v < g.first + g.size; }));
  };
  McqSelection sel;
  for (std::size_t a = 0; a < k; ++a) {
    std::size_t up = count_in(art.class_gadget[a].up);
    if (up > n) return std::nullopt;
    sel.vertex.push_back(up);
  }
  for (std::size_t p = 0; p < pair_count(k); ++p) {
    std::size_t up = count_in(art.edge_gadget[p].inner.up);
    if (up % art.q != 0 || up / art.q > m) return std::nullopt;
    sel.edge.push_back(up / art.q);
  }
  return sel;
}

// Enumerates every selection in odometer order (vertex positions, then edge positions).
template <typename Visit>
void for_each_selection(const McqShape& s, Visit visit) {
  const std::size_t pairs = pair_count(s.k);
  McqSelection sel{std::vector<std::size_t>(s.k, 0), std::vector<std::size_t>(pairs, 0)};
  while (true) {
    visit(sel);
    std::size_t i = 0;
    for (; i < s.k; ++i) {
      if (++sel.vertex[i] <= s.n) break;
      sel.vertex[i] = 0;
    }
    if (i < s.k) continue;
    std::size_t p = 0;
    for (; p < pairs; ++p) {
      if (++sel.edge[p] <= s.m) break;
      sel.edge[p] = 0;
    }
    if (p == pairs) return;
  }
}

// ---------------------------------------------------------------------------
// Generators

struct PlantedMcq {
  McqInstance instance;
  McqSelection planted;
};

// Class a holds vertex ids a*(n+1) .. a*(n+1)+n. Uses raw mt19937_64 output so the
// result depends only on rng_seed.
inline PlantedMcq gen_planted_mcq(std::size_t k, std::size_t n, std::size_t m, std::uint64_t rng_seed) {
  if (k < 2 || n < 1) throw InvalidArgument("planted mcq needs k >= 2 and n >= 1");
  if (m + 1 > (n + 1) * (n + 1))
    throw InvalidArgument("planted mcq needs m+1 <= (n+1)^2 (got n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
  std::mt19937_64 rng(rng_seed);
  auto below = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

  PlantedMcq out;
  McqInstance& mcq = out.instance;
  mcq.k = k;
  for (std::size_t a = 0; a < k; ++a) {
    mcq.classes.emplace_back();
    for (std::size_t i = 0; i <= n; ++i) mcq.classes[a].push_back(a * (n + 1) + i);
  }
  std::vector<std::size_t> pick(k);
  for (auto& p : pick) p = below(n + 1);

  for (auto [a, b] : class_pairs(k)) {
    std::vector<std::pair<std::size_t, std::size_t>> others;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j)
        if (i != pick[a] || j != pick[b]) others.emplace_back(i, j);
    // Partial Fisher-Yates for the m extra edges.
    for (std::size_t e = 0; e < m; ++e) std::swap(others[e], others[e + below(others.size() - e)]);
    mcq.edges.emplace_back(mcq.classes[a][pick[a]], mcq.classes[b][pick[b]]);
    for (std::size_t e = 0; e < m; ++e)
      mcq.edges.emplace_back(mcq.classes[a][others[e].first], mcq.classes[b][others[e].second]);
  }
  out.planted = *clique_on_vertices(index_mcq(mcq), pick);
  return out;
}

// Path p_1..p_{2n} on vertices 0..2n-1 plus an apex (vertex 2n) adjacent to
// p_1, p_3, ..., p_{2n-1}. Majority thresholds, budget 1.
inline Instance gen_appendix_family(std::size_t n) {
  if (n < 2) throw InvalidArgument("appendix family needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < 2 * n; ++i) edges.emplace_back(i, i + 1);
  for (Vertex i = 0; i < 2 * n; i += 2) edges.emplace_back(2 * n, i);
  return Instance::majority(Graph::from_edges(2 * n + 1, edges), 1);
}

inline Vertex appendix_apex(std::size_t n) { return 2 * n; }

// ---------------------------------------------------------------------------
// JSON

inline McqInstance parse_mcq(std::string_view text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  auto index = [](const json& v, const std::string& field) -> std::size_t {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
      throw ParseError(field + ": expected a non-negative integer");
    return v.get<std::size_t>();
  };
  if (!j.is_object()) throw ParseError("mcq: expected a JSON object");
  for (const char* key : {"k", "classes", "edges"})
    if (!j.contains(key)) throw ParseError(std::string(key) + ": missing field");
  McqInstance mcq;
  mcq.k = index(j["k"], "k");
  if (!j["classes"].is_array()) throw ParseError("classes: expected an array");
  for (std::size_t a = 0; a < j["classes"].size(); ++a) {
    const json& c = j["classes"][a];
    std::string field = "classes[" + std::to_string(a) + "]";
    if (!c.is_array()) throw ParseError(field + ": expected an array");
    mcq.classes.emplace_back();
    for (std::size_t i = 0; i < c.size(); ++i) mcq.classes.back().push_back(index(c[i], field));
  }
  if (!j["edges"].is_array()) throw ParseError("edges: expected an array");
  for (std::size_t e = 0; e < j["edges"].size(); ++e) {
    const json& ed = j["edges"][e];
    std::string field = "edges[" + std::to_string(e) + "]";
    if (!ed.is_array() || ed.size() != 2) throw ParseError(field + ": expected [u,v]");
    mcq.edges.emplace_back(index(ed[0], field), index(ed[1], field));
  }
  return mcq;
}

inline nlohmann::json mcq_to_json(const McqInstance& mcq) {
  nlohmann::json j;
  j["k"] = mcq.k;
  j["classes"] = mcq.classes;
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : mcq.edges) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

inline nlohmann::json selection_to_json(const McqSelection& sel) {
  nlohmann::json j;
  j["vertex"] = sel.vertex;
  j["edge"] = sel.edge;
  return j;
}

// Group layout and encodings, for the reduce subcommand's --map output.
inline nlohmann::json artifact_map_to_json(const ReductionArtifact& art) {
  using nlohmann::json;
  const auto [k, n, m] = art.shape();
  json j;
  j["k"] = k;
  j["n"] = n;
  j["m"] = m;
  j["q"] = art.q;
  j["budget"] = art.budget();
  json groups = json::array();
  for (const auto& g : art.layout.groups()) {
    json jg;
    jg["name"] = g.name;
    jg["first"] = g.first;
    jg["size"] = g.size;
    ThresholdMap f(art.instance.thresholds.begin() + g.first, art.instance.thresholds.begin() + g.first + g.size);
    jg["thresholds"] = f;
    jg["threshold_is_degree"] = g.threshold_is_degree;
    groups.push_back(std::move(jg));
  }
  j["groups"] = std::move(groups);
  json wiring = json::array();
  for (auto [a, b] : art.layout.wiring()) wiring.push_back({art.layout.group(a).name, art.layout.group(b).name});
  j["wiring"] = std::move(wiring);

  json classes = json::array();
  for (std::size_t a = 0; a < k; ++a) {
    json jc;
    jc["class"] = a;
    jc["up"] = art.layout.group(art.class_gadget[a].up).name;
    jc["down"] = art.layout.group(art.class_gadget[a].down).name;
    json enc = json::array();
    for (std::size_t i = 0; i <= n; ++i) enc.push_back({{"position", i}, {"up", i}, {"down", n - i}});
    jc["encoding"] = std::move(enc);
    classes.push_back(std::move(jc));
  }
  j["classes"] = std::move(classes);

  json pairs = json::array();
  for (auto [a, b] : class_pairs(k)) {
    std::size_t p = pair_index(k, a, b);
    json jp;
    jp["pair"] = {a, b};
    jp["up"] = art.layout.group(art.edge_gadget[p].inner.up).name;
    jp["down"] = art.layout.group(art.edge_gadget[p].inner.down).name;
    json enc = json::array();
    for (std::size_t l = 0; l <= m; ++l) {
      auto [i, jj] = art.mcq.pair_edges[p][l];
      enc.push_back({{"position", l},
                     {"endpoints", {i, jj}},
                     {"up", art.q * l},
                     {"down", art.q * (m - l)}});
    }
    jp["encoding"] = std::move(enc);
    pairs.push_back(std::move(jp));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

}  // namespace tss
