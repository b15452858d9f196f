#pragma once

// Exhaustive checks of the standalone selection and multiple gadgets. Vertices of
// one group with equal thresholds are interchangeable, so the multiple-gadget
// sweep enumerates seed counts for those groups and subsets for the ladders.

#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tss/activation.hpp"
#include "tss/reduce.hpp"

namespace tss::checks {

inline VertexSet first_of(const GadgetLayout& layout, std::size_t group, std::size_t count) {
  VertexSet out = layout.vertices(group);
  out.resize(count);
  return out;
}

inline VertexSet unite(std::initializer_list<VertexSet> parts) {
  VertexSet out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return normalized(std::move(out));
}

// Every s-subset of the selection part succeeds; nothing of size < s, and no set
// of size <= s touching the guard, does.
inline bool selection_gadget_behaves(std::size_t s, std::size_t t, std::string& why) {
  GadgetLayout layout = build_selection_gadget(s, t);
  Instance inst = layout.assemble(s);
  oracle::MaskGraph g(inst.graph);
  const std::size_t selection = 2 * s;  // up and down come first
  for (oracle::Mask seed = 0; seed <= g.all(); ++seed) {
    auto size = static_cast<std::size_t>(std::popcount(seed));
    bool touches_guard = (seed >> selection) != 0;
    bool ok = oracle::target(g, inst.thresholds, seed);
    std::ostringstream where;
    where << "L(" << s << "," << t << ") seed mask " << seed;
    if (size == s && !touches_guard && !ok) {
      why = where.str() + ": selection seed failed";
      return false;
    }
    if ((size < s || (size == s && touches_guard)) && ok) {
      why = where.str() + ": forbidden seed succeeded";
      return false;
    }
    if (seed == g.all()) break;
  }
  return true;
}

struct MultipleGadgetView {
  GadgetLayout layout;
  Instance instance;
  std::size_t l_up, l_down, l_guard, m_up, m_down, m_guard;

  MultipleGadgetView(std::size_t q, std::size_t s) : layout(build_multiple_gadget(q, s)), instance(layout.assemble(q * s)) {
    l_up = *layout.find("L-up");
    l_down = *layout.find("L-down");
    l_guard = *layout.find("L-guard");
    m_up = *layout.find("M-up");
    m_down = *layout.find("M-down");
    m_guard = *layout.find("M-guard");
  }

  VertexSet selection_seed(std::size_t z, std::size_t down) const {
    return unite({first_of(layout, l_up, z), first_of(layout, l_down, down)});
  }

  // Guards and ladders all active by round 3.
  bool gadget_active_by_round_three(const ActivationTrace& trace) const {
    for (std::size_t g : {l_guard, m_up, m_down, m_guard}) {
      auto r = group_activation_round(trace, layout.vertices(g));
      if (!r || *r > 3) return false;
    }
    return true;
  }
};

// A (z, qs - z) selection seed activates the gadget within three rounds exactly
// when q divides z; no seed smaller than qs is a target set.
inline bool multiple_gadget_behaves(std::size_t q, std::size_t s, std::string& why) {
  MultipleGadgetView view(q, s);
  const std::size_t qs = q * s;
  std::ostringstream where;
  where << "M(q=" << q << ",s=" << s << ")";
  for (std::size_t z = 0; z <= qs; ++z) {
    auto trace = simulate(view.instance, view.selection_seed(z, qs - z));
    bool expected = z % q == 0;
    bool fast = trace.successful && view.gadget_active_by_round_three(trace);
    if (fast != expected) {
      why = where.str() + " z=" + std::to_string(z) + (expected ? ": did not activate in time" : ": activated");
      return false;
    }
    if (!expected && trace.successful) {
      why = where.str() + " z=" + std::to_string(z) + ": non-multiple seed is a target set";
      return false;
    }
  }

  const auto& L = view.layout;
  const std::size_t sizes[] = {L.group(view.l_up).size, L.group(view.l_down).size, L.group(view.l_guard).size,
                               L.group(view.m_guard).size};
  for (std::size_t up = 0; up <= sizes[0]; ++up)
    for (std::size_t down = 0; down <= sizes[1] && up + down < qs; ++down)
      for (std::size_t guard = 0; guard <= sizes[2] && up + down + guard < qs; ++guard)
        for (std::size_t mg = 0; mg <= sizes[3] && up + down + guard + mg < qs; ++mg)
          for (std::size_t mu = 0; mu < (std::size_t{1} << s); ++mu)
            for (std::size_t md = 0; md < (std::size_t{1} << s); ++md) {
              std::size_t total = up + down + guard + mg + std::popcount(mu) + std::popcount(md);
              if (total >= qs) continue;
              VertexSet seed = unite({first_of(L, view.l_up, up), first_of(L, view.l_down, down),
                                      first_of(L, view.l_guard, guard), first_of(L, view.m_guard, mg)});
              for (std::size_t i = 0; i < s; ++i) {
                if (mu >> i & 1) seed.push_back(L.group(view.m_up).vertex(i));
                if (md >> i & 1) seed.push_back(L.group(view.m_down).vertex(i));
              }
              if (is_target_set(view.instance, normalized(seed))) {
                why = where.str() + ": seed of size " + std::to_string(total) + " < qs succeeded";
                return false;
              }
            }
  return true;
}

}  // namespace tss::checks
