#include "lad/discrete.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace lad {

namespace {

// Triviality of a local action; symbolic actions are trusted via their flag.
bool action_trivial(const Diagram& diagram, int vertex,
                    std::vector<std::string>* flags) {
  const LocalAction& action = diagram.action(vertex);
  if (action.is_symbolic()) {
    if (flags)
      flags->push_back(diagram.core().vertex_id(vertex) + ":trivial=" +
                       (action.symbolic->trivial ? "true" : "false"));
    return action.symbolic->trivial;
  }
  return action.explicit_group->is_trivial();
}

bool action_semiregular(const Diagram& diagram, int vertex,
                        std::vector<std::string>* flags) {
  const LocalAction& action = diagram.action(vertex);
  if (action.is_symbolic()) {
    if (flags)
      flags->push_back(diagram.core().vertex_id(vertex) + ":semiregular=" +
                       (action.symbolic->semiregular ? "true" : "false"));
    return action.symbolic->semiregular;
  }
  return action.explicit_group->is_semiregular();
}

bool ray_pattern_trivial(const RayGadget& ray) {
  for (const RaySegment& segment : ray.segments)
    if (!segment.action.explicit_group->is_trivial()) return false;
  return true;
}

bool ray_pattern_semiregular(const RayGadget& ray) {
  for (const RaySegment& segment : ray.segments)
    if (!segment.action.explicit_group->is_semiregular()) return false;
  return true;
}

// Colours at a cotree vertex that lie on arcs of the cotree itself: induced
// core arcs and the attachment arcs of rays contained in the cotree.
std::vector<std::string> cotree_colours(const Diagram& diagram, int vertex,
                                        const std::set<std::string>& inside,
                                        const std::set<std::string>& inside_rays) {
  std::vector<std::string> colours;
  const SerreGraph& core = diagram.core();
  for (int a : core.out_arcs(vertex)) {
    if (diagram.colour_set(a).infinite) continue;
    if (!inside.count(core.vertex_id(core.terminus(a)))) continue;
    const std::vector<std::string>& set = diagram.colour_set(a).colours;
    colours.insert(colours.end(), set.begin(), set.end());
  }
  for (int r : diagram.rays_at(vertex)) {
    if (!inside_rays.count(diagram.ray(r).id)) continue;
    const std::vector<std::string>& set = diagram.ray(r).segments.front().out_colours;
    colours.insert(colours.end(), set.begin(), set.end());
  }
  return colours;
}

// Fixed-vertex and inversion share one clause.
DiscretenessVerdict decide_fixed_or_inversion(const Diagram& diagram,
                                              DiscretenessVerdict verdict) {
  // A non-trivial action anywhere in a ray pattern repeats at infinitely many
  // vertices.
  for (const RayGadget& ray : diagram.rays())
    if (!ray_pattern_trivial(ray)) {
      verdict.verdict = Discreteness::NonDiscrete;
      verdict.detail = "infinitely-many-nontrivial:ray:" + ray.id;
      return verdict;
    }
  const SerreGraph& core = diagram.core();
  for (int v = 0; v < static_cast<int>(core.vertex_count()); ++v) {
    const LocalAction& action = diagram.action(v);
    if (!action.is_symbolic()) continue;
    verdict.consumed_flags.push_back(core.vertex_id(v) + ":finite_base=" +
                                     (action.symbolic->finite_base ? "true" : "false"));
    if (!action.symbolic->finite_base) {
      verdict.verdict = Discreteness::NonDiscrete;
      verdict.detail = "no-finite-base:" + core.vertex_id(v);
      return verdict;
    }
    for (int a : core.out_arcs(v)) {
      if (!diagram.colour_set(a).infinite) continue;
      int u = core.terminus(a);
      if (!action_trivial(diagram, u, &verdict.consumed_flags)) {
        verdict.verdict = Discreteness::NonDiscrete;
        verdict.detail = "infinite-arc:" + core.arc_id(a) +
                         ":nontrivial-target:" + core.vertex_id(u);
        return verdict;
      }
    }
  }
  verdict.verdict = Discreteness::Discrete;
  return verdict;
}

}  // namespace

DiscretenessVerdict decide(const Diagram& diagram, const ActionTypeVerdict& type) {
  DiscretenessVerdict verdict;
  verdict.type = type.type;
  const SerreGraph& core = diagram.core();

  switch (type.type) {
    case ActionType::FixedVertex:
      verdict.clause = "fixed-vertex";
      return decide_fixed_or_inversion(diagram, std::move(verdict));
    case ActionType::Inversion:
      verdict.clause = "inversion";
      return decide_fixed_or_inversion(diagram, std::move(verdict));

    case ActionType::Lineal: {
      verdict.clause = "lineal-trivial";
      for (int v = 0; v < static_cast<int>(core.vertex_count()); ++v)
        if (!action_trivial(diagram, v, &verdict.consumed_flags)) {
          verdict.verdict = Discreteness::NonDiscrete;
          verdict.detail = "nontrivial:" + core.vertex_id(v);
          return verdict;
        }
      for (const RayGadget& ray : diagram.rays())
        if (!ray_pattern_trivial(ray)) {
          verdict.verdict = Discreteness::NonDiscrete;
          verdict.detail = "nontrivial:ray:" + ray.id;
          return verdict;
        }
      verdict.verdict = Discreteness::Discrete;
      return verdict;
    }

    case ActionType::Horocyclic:
      verdict.clause = "horocyclic";
      verdict.verdict = Discreteness::NonDiscrete;
      verdict.detail = "unconditional";
      return verdict;
    case ActionType::Focal:
      verdict.clause = "focal";
      verdict.verdict = Discreteness::NonDiscrete;
      verdict.detail = "unconditional";
      return verdict;

    case ActionType::General: {
      verdict.clause = "general-semiregular";
      const Cotree& cotree = *type.witness_cotree;
      std::set<std::string> inside(cotree.vertices.begin(), cotree.vertices.end());
      std::set<std::string> inside_rays(cotree.rays.begin(), cotree.rays.end());
      for (int v = 0; v < static_cast<int>(core.vertex_count()); ++v) {
        bool in_cotree = inside.count(core.vertex_id(v)) > 0;
        if (in_cotree) {
          // Semiregularity is needed exactly on the cotree colours. A colour
          // on an arc into a pruned branch is exempt: its stabiliser cannot
          // be pushed past a finite set, because coloured paths never return
          // out of a branch whose arcs towards the cotree are singletons.
          const LocalAction& action = diagram.action(v);
          if (action.is_symbolic()) {
            if (!action_semiregular(diagram, v, &verdict.consumed_flags)) {
              verdict.verdict = Discreteness::NonDiscrete;
              verdict.detail = "not-semiregular:" + core.vertex_id(v);
              return verdict;
            }
            continue;
          }
          std::vector<std::string> colours =
              cotree_colours(diagram, v, inside, inside_rays);
          const PermGroup& group = *action.explicit_group;
          std::vector<std::uint32_t> indices;
          for (const std::string& c : colours) indices.push_back(group.index_of(c));
          for (const Permutation& g : group.enumerate()) {
            if (g.is_identity()) continue;
            for (std::uint32_t i : indices)
              if (g(i) == i) {
                verdict.verdict = Discreteness::NonDiscrete;
                verdict.detail = "not-semiregular:" + core.vertex_id(v);
                return verdict;
              }
          }
        }
        if (!in_cotree && !action_trivial(diagram, v, &verdict.consumed_flags)) {
          verdict.verdict = Discreteness::NonDiscrete;
          verdict.detail = "nontrivial-outside:" + core.vertex_id(v);
          return verdict;
        }
      }
      for (const RayGadget& ray : diagram.rays()) {
        bool in_cotree = inside_rays.count(ray.id) > 0;
        if (in_cotree && !ray_pattern_semiregular(ray)) {
          verdict.verdict = Discreteness::NonDiscrete;
          verdict.detail = "not-semiregular:ray:" + ray.id;
          return verdict;
        }
        if (!in_cotree && !ray_pattern_trivial(ray)) {
          verdict.verdict = Discreteness::NonDiscrete;
          verdict.detail = "nontrivial-outside:ray:" + ray.id;
          return verdict;
        }
      }
      verdict.verdict = Discreteness::Discrete;
      return verdict;
    }
  }
  throw Error("unreachable action type");
}

std::string DiscreteWitness::paths_text() const {
  if (symbolic) return "symbolic";
  std::ostringstream out;
  for (std::size_t i = 0; i < colour_paths.size(); ++i) {
    if (i > 0) out << ';';
    out << '(';
    for (std::size_t k = 0; k < colour_paths[i].size(); ++k) {
      if (k > 0) out << '.';
      out << colour_paths[i][k];
    }
    out << ')';
  }
  return out.str();
}

namespace {

// Does the half of the diagram reached through `arc` (away from `from`)
// contain a non-trivial action? Defined on tree-with-loops cores; the search
// never re-enters `from` through the reverse arc.
bool nontrivial_beyond(const Diagram& diagram, int arc) {
  const SerreGraph& core = diagram.core();
  if (core.is_loop(arc)) return false;
  std::set<int> seen{core.origin(arc)};
  std::vector<int> queue{core.terminus(arc)};
  seen.insert(core.terminus(arc));
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (!action_trivial(diagram, v, nullptr)) return true;
    for (int r : diagram.rays_at(v))
      if (!ray_pattern_trivial(diagram.ray(r))) return true;
    for (int a : core.out_arcs(v)) {
      int next = core.terminus(a);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return false;
}

// Iterated-base construction for the fixed-vertex / inversion witness. F_u is
// a base of G(u) avoiding the reverse colour, extended by the full colour set
// of every arc whose far side still carries a non-trivial action, so that the
// path set pins the local action along every non-trivial direction.
DiscreteWitness paths_witness(const Diagram& diagram, const std::string& base,
                              const std::string& include_colour) {
  DiscreteWitness witness;
  witness.base_vertex = base;
  witness.description = "iterated-base-paths";
  const SerreGraph& core = diagram.core();

  if (diagram.has_infinite_colours()) {
    for (int v = 0; v < static_cast<int>(core.vertex_count()); ++v)
      if (diagram.action(v).is_symbolic()) {
        witness.symbolic = true;
        witness.description = "finite-base-flags";
        return witness;
      }
  }

  auto vertex_colour_set = [&](int v, const std::string& excluded) {
    std::vector<std::string> result;
    std::set<std::string> present;
    const LocalAction& action = diagram.action(v);
    for (const std::string& c : action.explicit_group->find_base())
      if (c != excluded && present.insert(c).second) result.push_back(c);
    for (int a : core.out_arcs(v))
      if (!diagram.colour_set(a).infinite && nontrivial_beyond(diagram, a))
        for (const std::string& c : diagram.colour_set(a).colours)
          if (c != excluded && present.insert(c).second) result.push_back(c);
    return result;
  };

  int root = core.vertex_index(base);
  std::vector<std::string> root_colours = vertex_colour_set(root, "");
  if (!include_colour.empty() &&
      std::find(root_colours.begin(), root_colours.end(), include_colour) ==
          root_colours.end())
    root_colours.insert(root_colours.begin(), include_colour);

  // Paths move away from the base: the colour back towards it is the single
  // chosen reverse, which the extension rule excludes.
  struct State {
    std::vector<std::string> path;
    std::vector<std::string> colours;  // F at the path's endpoint
    std::string excluded;              // chosen reverse of the last colour
  };
  std::vector<State> queue{{{}, root_colours, ""}};
  std::size_t guard = 0;
  while (!queue.empty()) {
    if (++guard > 100000) throw Error("witness path enumeration did not terminate");
    State state = std::move(queue.back());
    queue.pop_back();
    witness.colour_paths.push_back(state.path);
    for (const std::string& colour : state.colours) {
      if (colour == state.excluded) continue;
      ArcRef ref = diagram.colour_type(colour);
      State next;
      next.path = state.path;
      next.path.push_back(colour);
      next.excluded = diagram.chosen_reverse_colour(colour);
      if (ref.is_ray) {
        next.colours = {};  // trivial pattern actions contribute nothing
      } else {
        next.colours =
            vertex_colour_set(core.terminus(ref.core_arc), next.excluded);
      }
      queue.push_back(std::move(next));
    }
  }
  std::sort(witness.colour_paths.begin(), witness.colour_paths.end(),
            [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return witness;
}

}  // namespace

DiscreteWitness discreteness_witness(const Diagram& diagram,
                                     const ActionTypeVerdict& type,
                                     const DiscretenessVerdict& verdict) {
  if (!verdict.is_discrete())
    throw NotDiscreteError("no discreteness witness for a non-discrete group");

  DiscreteWitness witness;
  switch (type.type) {
    case ActionType::Lineal: {
      // Any single vertex: all local actions are trivial.
      witness.base_vertex = type.witness_cotree->vertices.front();
      witness.colour_paths = {{}};
      witness.description = "single-vertex";
      return witness;
    }
    case ActionType::General: {
      // Any single arc over a cotree arc: its stabiliser is trivial by the
      // semiregular cascade along cotree colours.
      const Cotree& cotree = *type.witness_cotree;
      witness.base_vertex = cotree.vertices.front();
      witness.description = "single-arc";
      int v = diagram.core().vertex_index(witness.base_vertex);
      std::set<std::string> inside(cotree.vertices.begin(), cotree.vertices.end());
      std::set<std::string> inside_rays(cotree.rays.begin(), cotree.rays.end());
      std::vector<std::string> colours = cotree_colours(diagram, v, inside, inside_rays);
      if (colours.empty()) {
        witness.symbolic = true;
        return witness;
      }
      witness.colour_paths = {{}, {colours.front()}};
      return witness;
    }
    case ActionType::FixedVertex:
      return paths_witness(diagram, type.witness_vertices.front(), "");
    case ActionType::Inversion: {
      // The base must contain the loop colour, fixing the inverted edge.
      const std::string& loop_colour =
          diagram.colour_set(diagram.core().arc_index(*type.witness_loop))
              .colours.front();
      return paths_witness(diagram, type.witness_vertices.front(), loop_colour);
    }
    default:
      throw NotDiscreteError("horocyclic and focal groups are never discrete");
  }
}

}  // namespace lad
