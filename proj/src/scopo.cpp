#include "lad/scopo.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace lad {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

// Out-going arc references at a core vertex: core arcs in declaration order,
// then the segment-0 outward reference of each attached ray.
std::vector<ArcRef> core_out_refs(const Diagram& diagram, int vertex) {
  std::vector<ArcRef> refs;
  for (int a : diagram.core().out_arcs(vertex)) refs.push_back(ArcRef::core(a));
  for (int r : diagram.rays_at(vertex)) refs.push_back(ArcRef::ray_arc(r, 0, true));
  return refs;
}

// Out-going arc references at a ray vertex in segment position s: the inward
// arc of its own segment and the outward arc of the following one.
std::pair<ArcRef, ArcRef> ray_out_refs(const Diagram& diagram, int ray, int s) {
  int period = diagram.ray(ray).period;
  return {ArcRef::ray_arc(ray, s, false), ArcRef::ray_arc(ray, (s + 1) % period, true)};
}

bool ref_singleton(const Diagram& diagram, const ArcRef& ref) {
  return diagram.ref_colours(ref).singleton();
}

enum class RayDirection { Unoriented, Outward, Inward, Mixed };

RayDirection ray_direction(const Diagram& diagram, const PartialOrientation& o,
                           int ray) {
  int period = diagram.ray(ray).period;
  int out = 0, in = 0;
  for (int s = 0; s < period; ++s) {
    if (o.contains(ArcRef::ray_arc(ray, s, true))) ++out;
    if (o.contains(ArcRef::ray_arc(ray, s, false))) ++in;
  }
  if (out == 0 && in == 0) return RayDirection::Unoriented;
  if (out == period && in == 0) return RayDirection::Outward;
  if (in == period && out == 0) return RayDirection::Inward;
  return RayDirection::Mixed;
}

bool all_in_singleton(const RayGadget& ray) {
  for (const RaySegment& segment : ray.segments)
    if (segment.in_colours.size() != 1) return false;
  return true;
}

bool all_out_singleton(const RayGadget& ray) {
  for (const RaySegment& segment : ray.segments)
    if (segment.out_colours.size() != 1) return false;
  return true;
}

}  // namespace

bool PartialOrientation::contains(const ArcRef& ref) const {
  return std::find(arcs.begin(), arcs.end(), ref) != arcs.end();
}

std::string to_string(ActionType type) {
  switch (type) {
    case ActionType::FixedVertex: return "FixedVertex";
    case ActionType::Inversion: return "Inversion";
    case ActionType::Lineal: return "Lineal";
    case ActionType::Horocyclic: return "Horocyclic";
    case ActionType::Focal: return "Focal";
    case ActionType::General: return "General";
  }
  return "?";
}

std::string ActionTypeVerdict::witness_text() const {
  std::ostringstream out;
  switch (type) {
    case ActionType::FixedVertex:
      out << "witness=" << join(witness_vertices);
      break;
    case ActionType::Inversion:
      out << "witness=" << join(witness_vertices) << " loop=" << *witness_loop;
      break;
    case ActionType::Lineal:
      out << "witness=" << join(witness_cotree->vertices)
          << " arcs=" << join(witness_orientation);
      break;
    case ActionType::Horocyclic:
      out << "witness=" << *witness_ray;
      break;
    case ActionType::Focal:
      out << "witness=" << join(witness_cotree->vertices)
          << " orientation=" << join(witness_orientation);
      break;
    case ActionType::General:
      out << "witness=" << join(witness_cotree->vertices);
      if (!witness_cotree->rays.empty())
        out << " rays=" << join(witness_cotree->rays);
      break;
  }
  return out.str();
}

bool is_scopo(const Diagram& diagram, const PartialOrientation& orientation) {
  for (const ArcRef& ref : orientation.arcs) {
    if (orientation.contains(diagram.ref_reverse(ref))) return false;  // O ∩ Ō ≠ ∅
    if (!ref_singleton(diagram, ref)) return false;
  }
  auto check_vertex = [&](const std::vector<ArcRef>& out_refs) {
    std::vector<const ArcRef*> chosen;
    for (const ArcRef& ref : out_refs)
      if (orientation.contains(ref)) chosen.push_back(&ref);
    if (chosen.size() > 1) return false;
    if (chosen.size() == 1)
      for (const ArcRef& ref : out_refs)
        if (!(ref == *chosen[0]) && !orientation.contains(diagram.ref_reverse(ref)))
          return false;
    return true;
  };
  for (int v = 0; v < static_cast<int>(diagram.core().vertex_count()); ++v)
    if (!check_vertex(core_out_refs(diagram, v))) return false;
  for (int r = 0; r < static_cast<int>(diagram.rays().size()); ++r)
    for (int s = 0; s < diagram.ray(r).period; ++s) {
      auto [inward, outward] = ray_out_refs(diagram, r, s);
      if (!check_vertex({inward, outward})) return false;
    }
  return true;
}

std::pair<AttractorResult, ScopoType> attractor(const Diagram& diagram,
                                                const PartialOrientation& orientation) {
  const SerreGraph& core = diagram.core();
  int n = static_cast<int>(core.vertex_count());

  std::vector<RayDirection> direction(diagram.rays().size());
  for (std::size_t r = 0; r < diagram.rays().size(); ++r) {
    direction[r] = ray_direction(diagram, orientation, static_cast<int>(r));
    if (direction[r] == RayDirection::Mixed)
      throw Error("orientation is not a scopo: mixed ray direction");
  }

  // Step map on core vertices; an outward ray absorbs into its end.
  constexpr int kFixed = -1;
  std::vector<int> next(n, kFixed);      // vertex index, kFixed, or -2 - ray
  std::vector<bool> has_step(n, false);  // f moves along a chosen arc
  for (int v = 0; v < n; ++v) {
    for (int a : core.out_arcs(v))
      if (orientation.contains(ArcRef::core(a))) {
        next[v] = core.terminus(a);
        has_step[v] = true;
      }
    for (int r : diagram.rays_at(v))
      if (orientation.contains(ArcRef::ray_arc(r, 0, true))) {
        next[v] = -2 - r;
        has_step[v] = true;
      }
  }

  std::set<int> periodic;
  std::set<int> reached_ends;
  for (int start = 0; start < n; ++start) {
    int current = start;
    for (int step = 0; step <= n && current >= 0; ++step)
      current = has_step[current] ? next[current] : current;
    if (current < 0) {
      reached_ends.insert(-2 - current);
      continue;
    }
    // `current` now lies on its periodic orbit; collect the cycle.
    int walker = current;
    do {
      periodic.insert(walker);
      walker = has_step[walker] ? next[walker] : walker;
    } while (walker != current);
  }

  AttractorResult result;
  if (!reached_ends.empty()) {
    if (reached_ends.size() > 1 || !periodic.empty())
      throw Error("orientation is not a scopo: attractor is not a single end");
    result.end_ray = diagram.ray(*reached_ends.begin()).id;
    return {result, ScopoType::C};
  }
  for (int v : periodic) result.core_vertices.push_back(core.vertex_id(v));
  for (std::size_t r = 0; r < diagram.rays().size(); ++r)
    if (direction[r] == RayDirection::Unoriented)
      result.whole_rays.push_back(diagram.rays()[r].id);
  bool cycle_arc = false;
  for (int v : periodic)
    if (has_step[v]) cycle_arc = true;
  return {result, cycle_arc ? ScopoType::B : ScopoType::A};
}

Cotree minimal_cotree(const Diagram& diagram,
                      const std::vector<std::string>& preference) {
  const SerreGraph& core = diagram.core();
  int n = static_cast<int>(core.vertex_count());
  if (n == 0) throw EmptyDiagramError("diagram has no vertices");

  // A ray is prunable exactly when every inward arc over one period has a
  // singleton colour set; otherwise the whole ray belongs to every cotree.
  std::vector<bool> ray_prunable(diagram.rays().size());
  std::vector<bool> blocked(n, false);
  for (std::size_t r = 0; r < diagram.rays().size(); ++r) {
    ray_prunable[r] = all_in_singleton(diagram.rays()[r]);
    if (!ray_prunable[r])
      blocked[core.vertex_index(diagram.rays()[r].attachment)] = true;
  }

  // removable[a]: the part of the graph behind o(a) can be pruned away by
  // leaf deletions ending with o(a) deleted along a. Least fixpoint; arcs on
  // cycles stay false because their requirements are circular.
  std::vector<bool> removable(core.arc_count(), false);
  auto removable_now = [&](int a) {
    int v = core.origin(a);
    if (core.is_loop(a) || blocked[v]) return false;
    if (!diagram.colour_set(a).singleton()) return false;
    for (int b : core.out_arcs(v)) {
      if (b == a) continue;
      if (core.is_loop(b)) return false;
      if (!removable[core.reverse(b)]) return false;
    }
    return true;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < static_cast<int>(core.arc_count()); ++a)
      if (!removable[a] && removable_now(a)) {
        removable[a] = true;
        changed = true;
      }
  }

  // Vertices contained in every cotree. When the set is empty the cotrees
  // have no common vertex; the graph is then a tree with single-vertex
  // cotrees and the earliest-declared one is the canonical result.
  std::vector<bool> keep(n, false);
  int kept = 0;
  for (int v = 0; v < n; ++v) {
    bool deletable = false;
    for (int a : core.out_arcs(v))
      if (removable[a]) deletable = true;
    keep[v] = !deletable;
    if (keep[v]) ++kept;
  }
  if (kept == 0) {
    std::vector<std::string> fixed = single_vertex_cotrees(diagram);
    if (fixed.empty()) throw Error("pruning emptied the diagram unexpectedly");
    keep[core.vertex_index(fixed.front())] = true;
    kept = 1;
  }

  // Preference-guided sequential pruning, as a cross-check that the kept set
  // really is the deletion fixpoint whatever the order.
  auto rank = [&](int v) {
    const std::string& id = core.vertex_id(v);
    for (std::size_t i = 0; i < preference.size(); ++i)
      if (preference[i] == id) return static_cast<int>(i);
    return static_cast<int>(preference.size()) + v;
  };
  std::vector<bool> alive(n, true);
  for (;;) {
    std::vector<std::pair<int, int>> candidates;  // (rank, vertex)
    for (int v = 0; v < n; ++v) {
      if (!alive[v] || keep[v] || blocked[v]) continue;
      bool has_loop = false;
      int edge_arcs = 0;
      int towards = -1;
      for (int a : core.out_arcs(v)) {
        if (core.is_loop(a)) {
          has_loop = true;
          break;
        }
        if (alive[core.terminus(a)]) {
          ++edge_arcs;
          towards = a;
        }
      }
      if (has_loop || edge_arcs != 1) continue;
      if (!diagram.colour_set(towards).singleton()) continue;
      candidates.emplace_back(rank(v), v);
    }
    if (candidates.empty()) break;
    alive[std::min_element(candidates.begin(), candidates.end())->second] = false;
  }
  for (int v = 0; v < n; ++v)
    if (alive[v] != keep[v])
      throw Error("leaf pruning did not converge to the common cotree kernel");

  Cotree cotree;
  for (int v = 0; v < n; ++v)
    if (keep[v]) cotree.vertices.push_back(core.vertex_id(v));
  for (std::size_t r = 0; r < diagram.rays().size(); ++r)
    if (!ray_prunable[r]) cotree.rays.push_back(diagram.rays()[r].id);

  if (cotree.rays.empty()) {
    std::vector<int> kept;
    for (int v = 0; v < n; ++v)
      if (alive[v]) kept.push_back(v);
    SerreGraph induced = core.induced(kept);
    if (induced.vertex_count() == 1 && induced.arc_count() == 0)
      cotree.single_vertex = true;
    if (induced.vertex_count() == 1 && induced.arc_count() == 1 &&
        induced.is_non_orientable(0))
      cotree.inversion_loop = true;
    cotree.cycle_order = induced.cycle_graph_order();
  }
  return cotree;
}

std::vector<std::string> single_vertex_cotrees(const Diagram& diagram) {
  const SerreGraph& core = diagram.core();
  if (!core.is_tree()) return {};
  for (const RayGadget& ray : diagram.rays())
    if (!all_in_singleton(ray)) return {};
  std::vector<std::string> result;
  for (int v = 0; v < static_cast<int>(core.vertex_count()); ++v) {
    std::vector<int> dist = core.distances_from(v);
    bool ok = true;
    for (int a = 0; a < static_cast<int>(core.arc_count()) && ok; ++a)
      if (dist[core.terminus(a)] < dist[core.origin(a)] &&
          !diagram.colour_set(a).singleton())
        ok = false;
    if (ok) result.push_back(core.vertex_id(v));
  }
  return result;
}

std::vector<std::string> horocyclic_ends(const Diagram& diagram) {
  const SerreGraph& core = diagram.core();
  if (!core.is_tree())
    throw NotATreeError("horocyclic ends are defined on tree diagrams only");
  std::vector<std::string> result;
  for (std::size_t r = 0; r < diagram.rays().size(); ++r) {
    const RayGadget& ray = diagram.rays()[r];
    if (!all_out_singleton(ray)) continue;
    bool ok = true;
    // Arcs oriented towards the end outside the ray: the other rays' inward
    // arcs, and every core arc pointing towards the attachment vertex.
    for (std::size_t other = 0; other < diagram.rays().size() && ok; ++other)
      if (other != r && !all_in_singleton(diagram.rays()[other])) ok = false;
    std::vector<int> dist = core.distances_from(core.vertex_index(ray.attachment));
    for (int a = 0; a < static_cast<int>(core.arc_count()) && ok; ++a)
      if (dist[core.terminus(a)] < dist[core.origin(a)] &&
          !diagram.colour_set(a).singleton())
        ok = false;
    if (ok) result.push_back(ray.id);
  }
  return result;
}

ActionTypeVerdict classify(const Diagram& diagram) {
  std::vector<std::string> violations = diagram.validate();
  if (!violations.empty())
    throw Error("diagram is invalid: " + violations.front());

  ActionTypeVerdict verdict;

  std::vector<std::string> fixed = single_vertex_cotrees(diagram);
  if (!fixed.empty()) {
    verdict.type = ActionType::FixedVertex;
    verdict.witness_vertices = std::move(fixed);
    return verdict;
  }

  Cotree cotree = minimal_cotree(diagram);

  if (cotree.inversion_loop) {
    int v = diagram.core().vertex_index(cotree.vertices.front());
    int loop = -1;
    for (int a : diagram.core().out_arcs(v))
      if (diagram.core().is_non_orientable(a)) loop = a;
    if (loop >= 0 && diagram.colour_set(loop).singleton()) {
      verdict.type = ActionType::Inversion;
      verdict.witness_vertices = cotree.vertices;
      verdict.witness_loop = diagram.core().arc_id(loop);
      verdict.witness_cotree = cotree;
      return verdict;
    }
  }

  if (cotree.cycle_order) {
    std::vector<int> kept;
    for (const std::string& id : cotree.vertices)
      kept.push_back(diagram.core().vertex_index(id));
    std::vector<int> arc_map;
    SerreGraph induced = diagram.core().induced(kept, &arc_map);

    bool all_singleton = true;
    for (int a = 0; a < static_cast<int>(induced.arc_count()); ++a)
      if (!diagram.colour_set(arc_map[a]).singleton()) all_singleton = false;
    if (all_singleton) {
      verdict.type = ActionType::Lineal;
      verdict.witness_cotree = cotree;
      for (int a = 0; a < static_cast<int>(induced.arc_count()); ++a)
        verdict.witness_orientation.push_back(induced.arc_id(a));
      return verdict;
    }

    auto [forward, backward] = induced.cyclic_orientations();
    for (const std::vector<int>& chosen : {forward, backward}) {
      bool chosen_singleton = true;
      for (int a : chosen)
        if (!diagram.colour_set(arc_map[a]).singleton()) chosen_singleton = false;
      if (!chosen_singleton) continue;
      bool reverse_large = false;
      for (int a = 0; a < static_cast<int>(induced.arc_count()); ++a) {
        if (std::find(chosen.begin(), chosen.end(), a) != chosen.end()) continue;
        const ColourSet& colours = diagram.colour_set(arc_map[a]);
        if (colours.infinite || colours.colours.size() >= 2) reverse_large = true;
      }
      if (reverse_large) {
        verdict.type = ActionType::Focal;
        verdict.witness_cotree = cotree;
        for (int a : chosen) verdict.witness_orientation.push_back(induced.arc_id(a));
        return verdict;
      }
    }
  }

  if (diagram.core().is_tree()) {
    std::vector<std::string> ends = horocyclic_ends(diagram);
    if (ends.size() == 1) {
      verdict.type = ActionType::Horocyclic;
      verdict.witness_ray = ends.front();
      return verdict;
    }
  }

  verdict.type = ActionType::General;
  verdict.witness_cotree = cotree;
  return verdict;
}

std::vector<PartialOrientation> enumerate_scopos(const Diagram& diagram,
                                                 std::size_t max_edges) {
  if (diagram.has_rays())
    throw Error("scopo enumeration is limited to finite diagrams");
  const SerreGraph& core = diagram.core();
  std::vector<int> reps = core.edge_representatives();
  if (reps.size() > max_edges)
    throw Error("too many edges for exhaustive scopo enumeration: " +
                std::to_string(reps.size()) + " > " + std::to_string(max_edges));

  std::vector<PartialOrientation> found;
  std::vector<int> out_degree(core.vertex_count(), 0);
  PartialOrientation current;

  // States per edge in lexicographic order: unoriented, the representative
  // arc, its reverse. Non-orientable loops stay unoriented.
  auto search = [&](auto&& self, std::size_t edge) -> void {
    if (edge == reps.size()) {
      if (is_scopo(diagram, current)) {
        PartialOrientation sorted = current;
        std::sort(sorted.arcs.begin(), sorted.arcs.end());
        found.push_back(std::move(sorted));
      }
      return;
    }
    int rep = reps[edge];
    self(self, edge + 1);
    if (core.is_non_orientable(rep)) return;
    for (int arc : {rep, core.reverse(rep)}) {
      if (!diagram.colour_set(arc).singleton()) continue;
      if (out_degree[core.origin(arc)] == 1) continue;  // confluence pruning
      ++out_degree[core.origin(arc)];
      current.arcs.push_back(ArcRef::core(arc));
      self(self, edge + 1);
      current.arcs.pop_back();
      --out_degree[core.origin(arc)];
    }
  };
  search(search, 0);
  std::sort(found.begin(), found.end(),
            [](const PartialOrientation& a, const PartialOrientation& b) {
              return a.arcs < b.arcs;
            });
  return found;
}

}  // namespace lad
