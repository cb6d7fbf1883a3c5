#ifndef LAD_DIAGRAM_HPP
#define LAD_DIAGRAM_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "lad/perm.hpp"
#include "lad/sgraph.hpp"

namespace lad {

// Colour set of one arc: an explicit ordered list, or a symbolically infinite
// set with a declared name.
struct ColourSet {
  bool infinite = false;
  std::string symbolic_name;
  std::vector<std::string> colours;

  static ColourSet finite(std::vector<std::string> names) {
    ColourSet c;
    c.colours = std::move(names);
    return c;
  }
  static ColourSet infinite_named(std::string name) {
    ColourSet c;
    c.infinite = true;
    c.symbolic_name = std::move(name);
    return c;
  }
  bool singleton() const { return !infinite && colours.size() == 1; }
  bool empty() const { return !infinite && colours.empty(); }
};

// Declared behaviour of an infinite local action: exactly the flags the
// discreteness criteria consume, plus the per-arc orbit declaration.
struct SymbolicAction {
  bool trivial = false;
  bool semiregular = false;
  bool finite_base = false;
  // arc id -> declared orbit size ("inf" or a positive integer as text).
  std::vector<std::pair<std::string, std::string>> orbits;
};

struct LocalAction {
  std::optional<PermGroup> explicit_group;
  std::optional<SymbolicAction> symbolic;
  // Raw generator text kept when the group could not be built (the diagram is
  // invalid; validate() reports why).
  std::optional<std::string> unparsed;

  bool is_explicit() const { return explicit_group.has_value(); }
  bool is_symbolic() const { return symbolic.has_value(); }
};

// One period step of a ray: the outward arc (away from the core) into the
// fresh vertex, the inward reverse arc, and the fresh vertex's local action.
// The action's universe is in_colours followed by the NEXT segment's
// out_colours (wrapping to segment 0), all in raw pattern names.
struct RaySegment {
  std::vector<std::string> out_colours;
  std::vector<std::string> in_colours;
  LocalAction action;
};

// A one-sided eventually periodic ray hanging off a core vertex; contributes
// exactly one end. The attachment arc carries segment 0's colour sets.
struct RayGadget {
  std::string id;
  std::string attachment;
  int period = 1;
  std::vector<RaySegment> segments;
};

// Reference to an arc of the (possibly infinite) diagram graph: either a core
// arc, or one periodic arc class of a ray (segment index + direction). A ray
// reference stands for all repetitions of that segment.
struct ArcRef {
  bool is_ray = false;
  int core_arc = -1;
  int ray = -1;
  int segment = 0;
  bool outward = true;

  static ArcRef core(int arc) {
    ArcRef r;
    r.core_arc = arc;
    return r;
  }
  static ArcRef ray_arc(int ray, int segment, bool outward) {
    ArcRef r;
    r.is_ray = true;
    r.ray = ray;
    r.segment = segment;
    r.outward = outward;
    return r;
  }
  friend bool operator==(const ArcRef& a, const ArcRef& b) {
    return a.is_ray == b.is_ray && a.core_arc == b.core_arc && a.ray == b.ray &&
           a.segment == b.segment && a.outward == b.outward;
  }
  friend bool operator<(const ArcRef& a, const ArcRef& b) {
    auto key = [](const ArcRef& r) {
      return std::tuple<int, int, int, int, int>(r.is_ray ? 1 : 0, r.core_arc, r.ray,
                                                 r.segment, r.outward ? 1 : 0);
    };
    return key(a) < key(b);
  }
};

// A local action diagram: finite core graph with colour sets and local
// actions, plus optional periodic ray gadgets. Immutable by convention once
// finalize() has run and validate() reports no violations.
class Diagram {
 public:
  // -- construction (used by the loader, truncation and tests) --
  int add_vertex(const std::string& id);
  int add_arc(const std::string& id, const std::string& from, const std::string& to,
              const std::string& reverse_id, ColourSet colours);
  int add_self_reverse_loop(const std::string& id, const std::string& at,
                            ColourSet colours);
  void set_action(const std::string& vertex, LocalAction action);
  void add_ray(RayGadget ray);
  void mark_frontier(const std::string& vertex);
  // Links reverses and builds the colour lookup; throws Error on unresolved
  // arc references.
  void finalize();

  // -- accessors --
  const SerreGraph& core() const { return core_; }
  const ColourSet& colour_set(int arc) const { return arc_colours_[arc]; }
  const LocalAction& action(int vertex) const { return actions_[vertex]; }
  bool has_action(int vertex) const;
  const std::vector<RayGadget>& rays() const { return rays_; }
  const RayGadget& ray(int index) const { return rays_[index]; }
  std::vector<int> rays_at(int vertex) const;
  bool is_frontier(int vertex) const;
  bool has_rays() const { return !rays_.empty(); }
  bool has_infinite_colours() const;

  // Ordered colour universe at a core vertex: core arcs in declaration order,
  // then segment-0 outward colours of attached rays. Infinite sets contribute
  // no names; *infinite is set when one is present.
  std::vector<std::string> vertex_universe(int vertex, bool* infinite = nullptr) const;

  // Colour universe of a ray segment's vertex, in raw pattern names.
  std::vector<std::string> segment_universe(int ray, int segment) const;

  ColourSet ref_colours(const ArcRef& ref) const;
  ArcRef ref_reverse(const ArcRef& ref) const;
  std::string ref_name(const ArcRef& ref) const;

  // The unique arc whose colour set contains the colour; throws
  // UnknownColourError.
  ArcRef colour_type(const std::string& colour) const;

  // First colour, in declaration order, of the colour set of the reverse of
  // the colour's arc. This is the deterministic reverse-colour policy shared
  // by the tree construction and the witness machinery. Throws Error when the
  // reverse set is infinite or empty.
  std::string chosen_reverse_colour(const std::string& colour) const;

  // All structural violations; empty means the diagram is valid.
  std::vector<std::string> validate() const;

  // Replaces each ray by `depth` explicit pattern repetitions. Repetition
  // j >= 1 suffixes colour names with "@j"; generated vertices are
  // "<ray>.v<i>" and arcs "<ray>.o<i>" / "<ray>.i<i>" for step i >= 1. The
  // last generated vertex of each ray keeps its pattern action, whose onward
  // orbit has no arc in the truncation; it is flagged frontier.
  Diagram truncate_rays(int depth) const;

  void record_assembly_violation(const std::string& message);

  friend bool structurally_equal(const Diagram& a, const Diagram& b);

 private:
  SerreGraph core_;
  std::vector<ColourSet> arc_colours_;
  std::vector<LocalAction> actions_;
  std::vector<bool> action_set_;
  std::vector<RayGadget> rays_;
  std::set<std::string> frontier_;
  std::vector<std::string> assembly_violations_;
  std::map<std::string, ArcRef> colour_location_;
};

bool structurally_equal(const Diagram& a, const Diagram& b);

}  // namespace lad

#endif
