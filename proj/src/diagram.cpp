#include "lad/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace lad {

namespace {

std::string colour_suffix(int repetition) {
  if (repetition == 0) return "";
  return "@" + std::to_string(repetition);
}

std::vector<std::string> suffixed(const std::vector<std::string>& names,
                                  int repetition) {
  std::vector<std::string> out;
  out.reserve(names.size());
  for (const std::string& name : names) out.push_back(name + colour_suffix(repetition));
  return out;
}

// Canonical form of a set partition for order-insensitive comparison.
std::vector<std::vector<std::string>> canonical_partition(
    std::vector<std::vector<std::string>> blocks) {
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

bool actions_equal(const LocalAction& a, const LocalAction& b) {
  if (a.is_explicit() != b.is_explicit() || a.is_symbolic() != b.is_symbolic())
    return false;
  if (a.is_explicit() && !(*a.explicit_group == *b.explicit_group)) return false;
  if (a.is_symbolic()) {
    const SymbolicAction& x = *a.symbolic;
    const SymbolicAction& y = *b.symbolic;
    if (x.trivial != y.trivial || x.semiregular != y.semiregular ||
        x.finite_base != y.finite_base || x.orbits != y.orbits)
      return false;
  }
  return a.unparsed == b.unparsed;
}

}  // namespace

int Diagram::add_vertex(const std::string& id) {
  int v = core_.add_vertex(id);
  actions_.emplace_back();
  action_set_.push_back(false);
  return v;
}

int Diagram::add_arc(const std::string& id, const std::string& from,
                     const std::string& to, const std::string& reverse_id,
                     ColourSet colours) {
  int a = core_.add_arc(id, from, to, reverse_id);
  arc_colours_.push_back(std::move(colours));
  return a;
}

int Diagram::add_self_reverse_loop(const std::string& id, const std::string& at,
                                   ColourSet colours) {
  int a = core_.add_self_reverse_loop(id, at);
  arc_colours_.push_back(std::move(colours));
  return a;
}

void Diagram::set_action(const std::string& vertex, LocalAction action) {
  int v = core_.vertex_index(vertex);
  actions_[v] = std::move(action);
  action_set_[v] = true;
}

void Diagram::add_ray(RayGadget ray) {
  if (!core_.has_vertex(ray.attachment))
    throw UnknownVertexError("ray attachment vertex unknown: " + ray.attachment);
  rays_.push_back(std::move(ray));
}

void Diagram::mark_frontier(const std::string& vertex) { frontier_.insert(vertex); }

void Diagram::record_assembly_violation(const std::string& message) {
  assembly_violations_.push_back(message);
}

void Diagram::finalize() {
  core_.link_reverses();
  colour_location_.clear();
  for (int a = 0; a < static_cast<int>(core_.arc_count()); ++a)
    for (const std::string& c : arc_colours_[a].colours)
      colour_location_.emplace(c, ArcRef::core(a));
  for (int r = 0; r < static_cast<int>(rays_.size()); ++r) {
    const RayGadget& ray = rays_[r];
    for (int s = 0; s < static_cast<int>(ray.segments.size()); ++s) {
      for (const std::string& c : ray.segments[s].out_colours)
        colour_location_.emplace(c, ArcRef::ray_arc(r, s, true));
      for (const std::string& c : ray.segments[s].in_colours)
        colour_location_.emplace(c, ArcRef::ray_arc(r, s, false));
    }
  }
}

bool Diagram::has_action(int vertex) const { return action_set_[vertex]; }

std::vector<int> Diagram::rays_at(int vertex) const {
  std::vector<int> result;
  for (int r = 0; r < static_cast<int>(rays_.size()); ++r)
    if (core_.vertex_index(rays_[r].attachment) == vertex) result.push_back(r);
  return result;
}

bool Diagram::is_frontier(int vertex) const {
  return frontier_.count(core_.vertex_id(vertex)) > 0;
}

bool Diagram::has_infinite_colours() const {
  for (const ColourSet& c : arc_colours_)
    if (c.infinite) return true;
  return false;
}

std::vector<std::string> Diagram::vertex_universe(int vertex, bool* infinite) const {
  std::vector<std::string> universe;
  bool saw_infinite = false;
  for (int a : core_.out_arcs(vertex)) {
    if (arc_colours_[a].infinite)
      saw_infinite = true;
    else
      universe.insert(universe.end(), arc_colours_[a].colours.begin(),
                      arc_colours_[a].colours.end());
  }
  for (int r : rays_at(vertex)) {
    const std::vector<std::string>& out = rays_[r].segments.front().out_colours;
    universe.insert(universe.end(), out.begin(), out.end());
  }
  if (infinite) *infinite = saw_infinite;
  return universe;
}

std::vector<std::string> Diagram::segment_universe(int ray, int segment) const {
  const RayGadget& gadget = rays_[ray];
  int next = (segment + 1) % gadget.period;
  std::vector<std::string> universe = gadget.segments[segment].in_colours;
  const std::vector<std::string>& out = gadget.segments[next].out_colours;
  universe.insert(universe.end(), out.begin(), out.end());
  return universe;
}

ColourSet Diagram::ref_colours(const ArcRef& ref) const {
  if (!ref.is_ray) return arc_colours_[ref.core_arc];
  const RaySegment& segment = rays_[ref.ray].segments[ref.segment];
  return ColourSet::finite(ref.outward ? segment.out_colours : segment.in_colours);
}

ArcRef Diagram::ref_reverse(const ArcRef& ref) const {
  if (!ref.is_ray) return ArcRef::core(core_.reverse(ref.core_arc));
  return ArcRef::ray_arc(ref.ray, ref.segment, !ref.outward);
}

std::string Diagram::ref_name(const ArcRef& ref) const {
  if (!ref.is_ray) return core_.arc_id(ref.core_arc);
  std::ostringstream out;
  out << rays_[ref.ray].id << "[" << ref.segment << "]"
      << (ref.outward ? "out" : "in");
  return out.str();
}

ArcRef Diagram::colour_type(const std::string& colour) const {
  auto it = colour_location_.find(colour);
  if (it == colour_location_.end())
    throw UnknownColourError("unknown colour: " + colour);
  return it->second;
}

std::string Diagram::chosen_reverse_colour(const std::string& colour) const {
  ArcRef reverse = ref_reverse(colour_type(colour));
  const ColourSet& set = ref_colours(reverse);
  if (set.infinite)
    throw Error("reverse colour set is infinite for colour " + colour);
  if (set.colours.empty())
    throw Error("reverse colour set is empty for colour " + colour);
  return set.colours.front();
}

std::vector<std::string> Diagram::validate() const {
  std::vector<std::string> violations = assembly_violations_;
  for (const std::string& v : core_.validate()) violations.push_back(v);

  // Colour sets: non-empty and pairwise disjoint across the whole diagram.
  std::map<std::string, int> colour_uses;
  auto note_colours = [&](const std::vector<std::string>& names) {
    for (const std::string& name : names) ++colour_uses[name];
  };
  for (int a = 0; a < static_cast<int>(core_.arc_count()); ++a) {
    if (arc_colours_[a].empty())
      violations.push_back("arc " + core_.arc_id(a) + ": empty colour set");
    note_colours(arc_colours_[a].colours);
  }
  for (const RayGadget& ray : rays_) {
    if (ray.period < 1 || ray.period != static_cast<int>(ray.segments.size()))
      violations.push_back("ray " + ray.id + ": period does not match segments");
    for (std::size_t s = 0; s < ray.segments.size(); ++s) {
      if (ray.segments[s].out_colours.empty())
        violations.push_back("ray " + ray.id + " segment " + std::to_string(s) +
                             ": empty outward colour set");
      if (ray.segments[s].in_colours.empty())
        violations.push_back("ray " + ray.id + " segment " + std::to_string(s) +
                             ": empty inward colour set");
      note_colours(ray.segments[s].out_colours);
      note_colours(ray.segments[s].in_colours);
    }
  }
  for (const auto& [name, uses] : colour_uses)
    if (uses > 1)
      violations.push_back("colour " + name + " declared " + std::to_string(uses) +
                           " times; colour sets must be disjoint");

  // Local actions at core vertices.
  for (int v = 0; v < static_cast<int>(core_.vertex_count()); ++v) {
    const std::string& id = core_.vertex_id(v);
    if (!action_set_[v]) {
      violations.push_back("vertex " + id + ": no local action declared");
      continue;
    }
    if (is_frontier(v)) continue;  // onward orbit has no arc in a truncation
    const LocalAction& action = actions_[v];
    bool infinite = false;
    std::vector<std::string> universe = vertex_universe(v, &infinite);
    if (action.unparsed) {
      violations.push_back("vertex " + id + ": local action could not be built (" +
                           *action.unparsed + ")");
      continue;
    }
    if (infinite && !action.is_symbolic()) {
      violations.push_back("vertex " + id +
                           ": infinite colour set requires a symbolic action");
      continue;
    }
    if (!infinite && action.is_symbolic()) {
      violations.push_back("vertex " + id +
                           ": symbolic action is only permitted with an infinite "
                           "colour set");
      continue;
    }
    if (action.is_explicit()) {
      const PermGroup& group = *action.explicit_group;
      std::vector<std::string> sorted_universe = universe;
      std::sort(sorted_universe.begin(), sorted_universe.end());
      std::vector<std::string> group_universe = group.universe();
      std::sort(group_universe.begin(), group_universe.end());
      if (sorted_universe != group_universe) {
        violations.push_back("vertex " + id +
                             ": action universe differs from the union of its "
                             "colour sets");
        continue;
      }
      std::vector<std::vector<std::string>> expected;
      for (int a : core_.out_arcs(v))
        if (!arc_colours_[a].infinite) expected.push_back(arc_colours_[a].colours);
      for (int r : rays_at(v)) expected.push_back(rays_[r].segments.front().out_colours);
      if (canonical_partition(group.orbits()) != canonical_partition(expected))
        violations.push_back("vertex " + id +
                             ": orbits of the local action are not precisely the "
                             "colour sets");
    } else if (action.is_symbolic()) {
      const SymbolicAction& sym = *action.symbolic;
      if (sym.trivial && (!sym.semiregular || !sym.finite_base))
        violations.push_back("vertex " + id +
                             ": trivial symbolic action must be semiregular with "
                             "a finite base");
      if (sym.trivial && infinite)
        violations.push_back("vertex " + id +
                             ": trivial action is incompatible with an infinite "
                             "colour set (orbits would be singletons)");
      // Declared orbits must name each arc and attached ray exactly once,
      // with matching sizes.
      std::map<std::string, std::string> declared;
      for (const auto& [name, size] : sym.orbits) {
        if (declared.count(name))
          violations.push_back("vertex " + id + ": orbit for " + name +
                               " declared twice");
        declared[name] = size;
      }
      auto check_entry = [&](const std::string& name, const ColourSet& colours) {
        auto it = declared.find(name);
        if (it == declared.end()) {
          violations.push_back("vertex " + id + ": missing orbit declaration for " +
                               name);
          return;
        }
        std::string expected =
            colours.infinite ? "inf" : std::to_string(colours.colours.size());
        if (it->second != expected)
          violations.push_back("vertex " + id + ": orbit size for " + name +
                               " is " + it->second + ", expected " + expected);
        declared.erase(it);
      };
      for (int a : core_.out_arcs(v)) check_entry(core_.arc_id(a), arc_colours_[a]);
      for (int r : rays_at(v))
        check_entry(rays_[r].id,
                    ColourSet::finite(rays_[r].segments.front().out_colours));
      for (const auto& [name, size] : declared)
        violations.push_back("vertex " + id + ": orbit declared for unknown arc " +
                             name);
    }
  }

  // Ray segment actions, at the raw pattern level.
  for (int r = 0; r < static_cast<int>(rays_.size()); ++r) {
    const RayGadget& ray = rays_[r];
    if (ray.period != static_cast<int>(ray.segments.size())) continue;
    for (int s = 0; s < ray.period; ++s) {
      const RaySegment& segment = ray.segments[s];
      std::string where = "ray " + ray.id + " segment " + std::to_string(s);
      if (segment.action.unparsed) {
        violations.push_back(where + ": action could not be built (" +
                             *segment.action.unparsed + ")");
        continue;
      }
      if (segment.action.is_symbolic()) {
        violations.push_back(where + ": ray pattern vertices may not carry "
                                     "symbolic actions");
        continue;
      }
      if (!segment.action.is_explicit()) {
        violations.push_back(where + ": no action declared");
        continue;
      }
      const PermGroup& group = *segment.action.explicit_group;
      std::vector<std::string> universe = segment_universe(r, s);
      std::vector<std::string> sorted_universe = universe;
      std::sort(sorted_universe.begin(), sorted_universe.end());
      std::vector<std::string> group_universe = group.universe();
      std::sort(group_universe.begin(), group_universe.end());
      if (sorted_universe != group_universe) {
        violations.push_back(where + ": action universe differs from in/out "
                                     "colour sets");
        continue;
      }
      int next = (s + 1) % ray.period;
      std::vector<std::vector<std::string>> expected{segment.in_colours,
                                                     ray.segments[next].out_colours};
      if (canonical_partition(group.orbits()) != canonical_partition(expected))
        violations.push_back(where + ": orbits of the action are not precisely "
                                     "the colour sets");
    }
  }
  return violations;
}

Diagram Diagram::truncate_rays(int depth) const {
  Diagram result;
  for (int v = 0; v < static_cast<int>(core_.vertex_count()); ++v)
    result.add_vertex(core_.vertex_id(v));
  for (int a = 0; a < static_cast<int>(core_.arc_count()); ++a) {
    if (core_.is_non_orientable(a))
      result.add_self_reverse_loop(core_.arc_id(a), core_.vertex_id(core_.origin(a)),
                                   arc_colours_[a]);
    else
      result.add_arc(core_.arc_id(a), core_.vertex_id(core_.origin(a)),
                     core_.vertex_id(core_.terminus(a)),
                     core_.arc_id(core_.reverse(a)), arc_colours_[a]);
  }
  for (int v = 0; v < static_cast<int>(core_.vertex_count()); ++v)
    if (action_set_[v]) result.set_action(core_.vertex_id(v), actions_[v]);
  for (const std::string& id : frontier_) result.mark_frontier(id);

  for (const RayGadget& ray : rays_) {
    if (depth == 0) {
      result.mark_frontier(ray.attachment);
      continue;
    }
    int steps = depth * ray.period;
    std::string previous = ray.attachment;
    for (int i = 1; i <= steps; ++i) {
      int seg = (i - 1) % ray.period;
      int rep = (i - 1) / ray.period;
      int next_rep = i / ray.period;
      std::string vertex = ray.id + ".v" + std::to_string(i);
      std::string out_id = ray.id + ".o" + std::to_string(i);
      std::string in_id = ray.id + ".i" + std::to_string(i);
      result.add_vertex(vertex);
      result.add_arc(out_id, previous, vertex, in_id,
                     ColourSet::finite(suffixed(ray.segments[seg].out_colours, rep)));
      result.add_arc(in_id, vertex, previous, out_id,
                     ColourSet::finite(suffixed(ray.segments[seg].in_colours, rep)));

      // The instance action: inward names take this repetition's suffix, the
      // onward names the next step's.
      const PermGroup& pattern = *ray.segments[seg].action.explicit_group;
      std::vector<std::string> universe;
      universe.reserve(pattern.universe().size());
      std::size_t in_count = ray.segments[seg].in_colours.size();
      for (std::size_t k = 0; k < pattern.universe().size(); ++k) {
        int suffix_rep = k < in_count ? rep : next_rep;
        universe.push_back(pattern.universe()[k] + colour_suffix(suffix_rep));
      }
      LocalAction action;
      action.explicit_group = PermGroup(std::move(universe), pattern.generators());
      result.set_action(vertex, std::move(action));
      previous = vertex;
    }
    result.mark_frontier(previous);
  }
  result.finalize();
  return result;
}

bool structurally_equal(const Diagram& a, const Diagram& b) {
  if (a.core_.vertex_count() != b.core_.vertex_count() ||
      a.core_.arc_count() != b.core_.arc_count())
    return false;
  for (std::size_t v = 0; v < a.core_.vertex_count(); ++v)
    if (a.core_.vertex_id(static_cast<int>(v)) != b.core_.vertex_id(static_cast<int>(v)))
      return false;
  for (int arc = 0; arc < static_cast<int>(a.core_.arc_count()); ++arc) {
    if (a.core_.arc_id(arc) != b.core_.arc_id(arc)) return false;
    if (a.core_.origin(arc) != b.core_.origin(arc)) return false;
    if (a.core_.terminus(arc) != b.core_.terminus(arc)) return false;
    if (a.core_.reverse(arc) != b.core_.reverse(arc)) return false;
    const ColourSet& ca = a.arc_colours_[arc];
    const ColourSet& cb = b.arc_colours_[arc];
    if (ca.infinite != cb.infinite || ca.symbolic_name != cb.symbolic_name ||
        ca.colours != cb.colours)
      return false;
  }
  for (std::size_t v = 0; v < a.core_.vertex_count(); ++v) {
    if (a.action_set_[v] != b.action_set_[v]) return false;
    if (a.action_set_[v] && !actions_equal(a.actions_[v], b.actions_[v])) return false;
  }
  if (a.rays_.size() != b.rays_.size()) return false;
  for (std::size_t r = 0; r < a.rays_.size(); ++r) {
    const RayGadget& ra = a.rays_[r];
    const RayGadget& rb = b.rays_[r];
    if (ra.id != rb.id || ra.attachment != rb.attachment || ra.period != rb.period)
      return false;
    if (ra.segments.size() != rb.segments.size()) return false;
    for (std::size_t s = 0; s < ra.segments.size(); ++s) {
      if (ra.segments[s].out_colours != rb.segments[s].out_colours) return false;
      if (ra.segments[s].in_colours != rb.segments[s].in_colours) return false;
      if (!actions_equal(ra.segments[s].action, rb.segments[s].action)) return false;
    }
  }
  return a.frontier_ == b.frontier_;
}

}  // namespace lad
