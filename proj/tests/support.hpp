#ifndef LAD_TESTS_SUPPORT_HPP
#define LAD_TESTS_SUPPORT_HPP

// Shared test-side machinery: random permutation groups, random valid
// diagrams, and an independent checker for the attractor trichotomy. The
// checkers here are written from first principles on purpose; they must not
// share code paths with the library functions they cross-examine.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lad/diagram.hpp"
#include "lad/perm.hpp"
#include "lad/scopo.hpp"

namespace testsupport {

using Rng = std::mt19937;

inline lad::Permutation random_permutation(Rng& rng, std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::shuffle(images.begin(), images.end(), rng);
  return lad::Permutation::from_images(std::move(images));
}

inline lad::PermGroup random_group(Rng& rng, std::size_t max_universe = 8,
                                   std::size_t max_generators = 3) {
  std::uniform_int_distribution<std::size_t> size_dist(1, max_universe);
  std::uniform_int_distribution<std::size_t> gen_dist(0, max_generators);
  std::size_t degree = size_dist(rng);
  std::vector<std::string> universe;
  for (std::size_t i = 0; i < degree; ++i) universe.push_back("p" + std::to_string(i));
  std::vector<lad::Permutation> generators;
  std::size_t count = gen_dist(rng);
  for (std::size_t g = 0; g < count; ++g)
    generators.push_back(random_permutation(rng, degree));
  return lad::PermGroup(std::move(universe), std::move(generators));
}

// A random valid diagram: connected core (spanning tree plus extra edges and
// loops), small colour sets, and per-vertex actions generated blockwise so
// that the orbits are exactly the colour sets.
inline lad::Diagram random_diagram(Rng& rng, int max_vertices = 6, int max_edges = 8) {
  std::uniform_int_distribution<int> vertex_dist(1, max_vertices);
  int n = vertex_dist(rng);
  lad::Diagram diagram;
  for (int v = 0; v < n; ++v) diagram.add_vertex("v" + std::to_string(v));

  int colour_counter = 0;
  auto fresh_colours = [&](std::size_t size) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < size; ++i)
      names.push_back("c" + std::to_string(colour_counter++));
    return names;
  };
  auto random_size = [&]() -> std::size_t {
    int roll = std::uniform_int_distribution<int>(0, 99)(rng);
    if (roll < 55) return 1;
    if (roll < 85) return 2;
    return 3;
  };

  int arc_counter = 0;
  auto add_edge = [&](int u, int v) {
    std::string a = "a" + std::to_string(arc_counter++);
    std::string b = "a" + std::to_string(arc_counter++);
    diagram.add_arc(a, "v" + std::to_string(u), "v" + std::to_string(v), b,
                    lad::ColourSet::finite(fresh_colours(random_size())));
    diagram.add_arc(b, "v" + std::to_string(v), "v" + std::to_string(u), a,
                    lad::ColourSet::finite(fresh_colours(random_size())));
  };

  int edges = 0;
  for (int v = 1; v < n; ++v) {
    int parent = std::uniform_int_distribution<int>(0, v - 1)(rng);
    add_edge(parent, v);
    ++edges;
  }
  int extra = std::uniform_int_distribution<int>(0, max_edges - edges)(rng);
  for (int e = 0; e < extra; ++e) {
    int kind = std::uniform_int_distribution<int>(0, 5)(rng);
    int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (kind == 0) {
      std::string id = "a" + std::to_string(arc_counter++);
      diagram.add_self_reverse_loop(id, "v" + std::to_string(u),
                                    lad::ColourSet::finite(fresh_colours(random_size())));
    } else if (kind == 1) {
      add_edge(u, u);  // orientable loop
    } else {
      int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
      add_edge(u, v);
    }
  }

  for (int v = 0; v < n; ++v) {
    std::vector<std::string> universe = diagram.vertex_universe(v);
    // One full cycle per colour block keeps each block a single orbit.
    std::vector<std::vector<std::uint32_t>> blocks;
    std::size_t offset = 0;
    for (int a : diagram.core().out_arcs(v)) {
      std::size_t width = diagram.colour_set(a).colours.size();
      std::vector<std::uint32_t> block(width);
      std::iota(block.begin(), block.end(), static_cast<std::uint32_t>(offset));
      offset += width;
      blocks.push_back(std::move(block));
    }
    std::vector<lad::Permutation> generators;
    std::vector<std::uint32_t> cycle(universe.size());
    std::iota(cycle.begin(), cycle.end(), 0u);
    for (const auto& block : blocks)
      for (std::size_t i = 0; i < block.size(); ++i)
        cycle[block[i]] = block[(i + 1) % block.size()];
    generators.push_back(lad::Permutation::from_images(std::move(cycle)));
    if (std::uniform_int_distribution<int>(0, 1)(rng)) {
      // An extra block-preserving shuffle for variety.
      std::vector<std::uint32_t> shuffle_images(universe.size());
      std::iota(shuffle_images.begin(), shuffle_images.end(), 0u);
      for (const auto& block : blocks) {
        std::vector<std::uint32_t> reordered = block;
        std::shuffle(reordered.begin(), reordered.end(), rng);
        for (std::size_t i = 0; i < block.size(); ++i)
          shuffle_images[block[i]] = reordered[i];
      }
      generators.push_back(lad::Permutation::from_images(std::move(shuffle_images)));
    }
    lad::LocalAction action;
    action.explicit_group = lad::PermGroup(universe, std::move(generators));
    diagram.set_action("v" + std::to_string(v), std::move(action));
  }
  diagram.finalize();
  return diagram;
}

// ---- independent attractor-clause checkers ---------------------------------

struct ProjectingStructure {
  bool valid = false;                 // outside forms a forest, one attachment each
  std::set<int> projecting_arcs;      // each outside vertex's arc towards K
};

// From-scratch analysis of the complement of K: every component of the
// outside must be a simple tree attached to K by exactly one edge; the
// projecting arcs are then forced.
inline ProjectingStructure analyse_complement(const lad::Diagram& diagram,
                                              const std::set<int>& kernel) {
  ProjectingStructure result;
  const lad::SerreGraph& core = diagram.core();
  int n = static_cast<int>(core.vertex_count());
  if (kernel.empty()) return result;

  std::vector<int> outside;
  for (int v = 0; v < n; ++v)
    if (!kernel.count(v)) outside.push_back(v);

  // Loops or parallel edges among outside vertices break path uniqueness.
  std::set<int> outside_set(outside.begin(), outside.end());
  std::size_t outside_edges = 0;
  std::set<std::pair<int, int>> seen_pairs;
  for (int a = 0; a < static_cast<int>(core.arc_count()); ++a) {
    if (a > core.reverse(a)) continue;  // one representative per edge
    int u = core.origin(a), v = core.terminus(a);
    bool u_out = outside_set.count(u), v_out = outside_set.count(v);
    if (u_out && v_out) {
      if (u == v) return result;  // loop outside
      if (!seen_pairs.insert(std::minmax(u, v)).second) return result;
      ++outside_edges;
    }
  }

  // Component decomposition of the outside.
  std::vector<int> component(n, -1);
  int components = 0;
  for (int start : outside) {
    if (component[start] >= 0) continue;
    component[start] = components;
    std::vector<int> queue{start};
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int a : core.out_arcs(v)) {
        int w = core.terminus(a);
        if (outside_set.count(w) && component[w] < 0) {
          component[w] = components;
          queue.push_back(w);
        }
      }
    }
    ++components;
  }
  if (outside_edges != outside.size() - components) return result;  // cycle

  // Exactly one attachment edge per component.
  std::vector<int> attachments(components, 0);
  std::vector<int> attachment_arc(components, -1);  // arc from outside into K
  for (int a = 0; a < static_cast<int>(core.arc_count()); ++a) {
    if (a > core.reverse(a)) continue;
    int u = core.origin(a), v = core.terminus(a);
    bool u_out = outside_set.count(u), v_out = outside_set.count(v);
    if (u_out == v_out) continue;
    int comp = component[u_out ? u : v];
    ++attachments[comp];
    attachment_arc[comp] = u_out ? a : core.reverse(a);
  }
  for (int c = 0; c < components; ++c)
    if (attachments[c] != 1) return result;

  // Root each component at its attachment and collect the arcs towards K.
  for (int c = 0; c < components; ++c) {
    int entry = core.origin(attachment_arc[c]);
    result.projecting_arcs.insert(attachment_arc[c]);
    std::vector<int> queue{entry};
    std::set<int> done{entry};
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int a : core.out_arcs(v)) {
        int w = core.terminus(a);
        if (!outside_set.count(w) || done.count(w)) continue;
        done.insert(w);
        result.projecting_arcs.insert(core.reverse(a));  // w's arc towards K
        queue.push_back(w);
      }
    }
  }
  result.valid = true;
  return result;
}

// Which clauses of the attractor trichotomy hold for a scopo with attractor
// vertex set K on a finite diagram.
struct ClauseCheck {
  bool clause_a = false;
  bool clause_b = false;
};

inline ClauseCheck check_attractor_clauses(const lad::Diagram& diagram,
                                           const lad::PartialOrientation& orientation,
                                           const std::set<int>& kernel) {
  ClauseCheck check;
  const lad::SerreGraph& core = diagram.core();
  ProjectingStructure structure = analyse_complement(diagram, kernel);
  if (!structure.valid) return check;

  std::set<int> chosen;
  for (const lad::ArcRef& ref : orientation.arcs) chosen.insert(ref.core_arc);

  // Clause (a): O is exactly the projecting arcs.
  check.clause_a = chosen == structure.projecting_arcs;

  // Clause (b): the kernel carries a cycle: every kernel vertex has exactly
  // two incident kernel arcs and exactly one chosen outgoing kernel arc, the
  // kernel is connected, and O is the projecting arcs plus that orientation.
  std::set<int> kernel_arcs;
  for (int a = 0; a < static_cast<int>(core.arc_count()); ++a)
    if (kernel.count(core.origin(a)) && kernel.count(core.terminus(a)))
      kernel_arcs.insert(a);
  bool cycle = true;
  std::set<int> cycle_orientation;
  for (int v : kernel) {
    int incident = 0, picked = 0;
    for (int a : core.out_arcs(v)) {
      if (!kernel_arcs.count(a)) continue;
      if (core.reverse(a) == a) cycle = false;  // non-orientable
      ++incident;
      if (chosen.count(a)) {
        ++picked;
        cycle_orientation.insert(a);
      }
    }
    if (incident != 2 || picked != 1) cycle = false;
  }
  if (cycle && !kernel.empty()) {
    // Connectivity of the kernel subgraph.
    std::set<int> seen{*kernel.begin()};
    std::vector<int> queue{*kernel.begin()};
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int a : core.out_arcs(v)) {
        int w = core.terminus(a);
        if (kernel_arcs.count(a) && !seen.count(w)) {
          seen.insert(w);
          queue.push_back(w);
        }
      }
    }
    if (seen.size() != kernel.size()) cycle = false;
  }
  if (cycle) {
    std::set<int> expected = structure.projecting_arcs;
    expected.insert(cycle_orientation.begin(), cycle_orientation.end());
    check.clause_b = chosen == expected;
  }
  return check;
}

}  // namespace testsupport

#endif
