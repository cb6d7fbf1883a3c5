#include "lad/ugroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace lad {

namespace {

std::string path_label(const std::vector<std::string>& path) {
  std::string out = "(";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += ",";
    out += path[i];
  }
  out += ")";
  return out;
}

// Neighbour of x along the arc labelled `colour`, or -1 when it is not in the
// tree (missing children at the boundary).
int neighbour_via(const DeltaTree& tree, int x, const std::string& colour) {
  const DeltaTree::Vertex& vertex = tree.vertex(x);
  if (!vertex.rpath.empty() && vertex.rpath.back() == colour) return vertex.parent;
  for (int child : vertex.children)
    if (tree.vertex(child).path.back() == colour) return child;
  return -1;
}

}  // namespace

LocalGroupTable::LocalGroupTable(const Diagram& diagram, std::size_t cap) {
  int n = static_cast<int>(diagram.core().vertex_count());
  groups_.reserve(n);
  elements_.reserve(n);
  stabilisers_.resize(n);
  for (int v = 0; v < n; ++v) {
    if (!diagram.has_action(v) || !diagram.action(v).is_explicit())
      throw Error("local group table requires explicit actions at every vertex");
    groups_.push_back(*diagram.action(v).explicit_group);
    elements_.push_back(groups_.back().enumerate(cap));
  }
}

const std::vector<Permutation>& LocalGroupTable::stabiliser(
    int vertex, const std::string& point) const {
  auto& cache = stabilisers_[vertex];
  auto it = cache.find(point);
  if (it != cache.end()) return it->second;
  std::uint32_t index = groups_[vertex].index_of(point);
  std::vector<Permutation> fixing;
  for (const Permutation& g : elements_[vertex])
    if (g(index) == index) fixing.push_back(g);
  return cache.emplace(point, std::move(fixing)).first->second;
}

bool LocalGroupTable::contains(int vertex, const Permutation& g) const {
  for (const Permutation& element : elements_[vertex])
    if (element == g) return true;
  return false;
}

std::optional<Permutation> LocalGroupTable::transport(int vertex,
                                                      const std::string& from,
                                                      const std::string& to) const {
  std::uint32_t a = groups_[vertex].index_of(from);
  std::uint32_t b = groups_[vertex].index_of(to);
  for (const Permutation& g : elements_[vertex])
    if (g(a) == b) return g;
  return std::nullopt;
}

BallAutomorphism BallAutomorphism::identity(const DeltaTree& tree) {
  BallAutomorphism g;
  g.host_ = &tree;
  g.image_.resize(tree.size());
  for (std::size_t v = 0; v < tree.size(); ++v) g.image_[v] = static_cast<int>(v);
  return g;
}

BallAutomorphism BallAutomorphism::empty(const DeltaTree& tree) {
  BallAutomorphism g;
  g.host_ = &tree;
  g.image_.assign(tree.size(), -1);
  return g;
}

std::vector<int> BallAutomorphism::moved_vertices() const {
  std::vector<int> moved;
  for (std::size_t v = 0; v < image_.size(); ++v)
    if (image_[v] >= 0 && image_[v] != static_cast<int>(v))
      moved.push_back(static_cast<int>(v));
  return moved;
}

bool BallAutomorphism::is_identity_map() const { return moved_vertices().empty(); }

BallAutomorphism BallAutomorphism::then(const BallAutomorphism& other) const {
  BallAutomorphism result = empty(*host_);
  for (std::size_t v = 0; v < image_.size(); ++v)
    if (image_[v] >= 0 && other.image_[image_[v]] >= 0)
      result.image_[v] = other.image_[image_[v]];
  return result;
}

BallAutomorphism BallAutomorphism::inverse() const {
  BallAutomorphism result = empty(*host_);
  for (std::size_t v = 0; v < image_.size(); ++v)
    if (image_[v] >= 0) result.image_[image_[v]] = static_cast<int>(v);
  return result;
}

Permutation local_action(const BallAutomorphism& g, int v) {
  const DeltaTree& tree = g.host();
  const DeltaTree::Vertex& vertex = tree.vertex(v);
  if (vertex.depth >= tree.radius())
    throw BoundaryVertexError("no local action at boundary vertices");
  if (!g.in_domain(v))
    throw BoundaryVertexError("vertex outside the domain");

  const Diagram& diagram = tree.diagram();
  std::vector<std::string> universe = diagram.vertex_universe(vertex.diagram_vertex);
  auto index_of = [&universe](const std::string& colour) {
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (universe[i] == colour) return static_cast<std::uint32_t>(i);
    throw Error("colour missing from the projected universe");
  };

  std::vector<std::uint32_t> images(universe.size());
  auto record = [&](int neighbour) {
    if (neighbour < 0 || !g.in_domain(neighbour))
      throw BoundaryVertexError("out-neighbourhood not fully inside the domain");
    const std::string& from = tree.arc_label(v, neighbour);
    const std::string& to = tree.arc_label(g.image(v), g.image(neighbour));
    images[index_of(from)] = index_of(to);
  };
  if (vertex.parent >= 0) record(vertex.parent);
  for (int child : vertex.children) record(child);
  return Permutation::from_images(std::move(images));
}

bool is_member(const BallAutomorphism& g, const LocalGroupTable& table) {
  const DeltaTree& tree = g.host();
  for (int v = 0; v < static_cast<int>(tree.size()); ++v) {
    const DeltaTree::Vertex& vertex = tree.vertex(v);
    if (vertex.depth >= tree.radius()) continue;
    if (!g.in_domain(v)) continue;
    bool visible = vertex.parent < 0 || g.in_domain(vertex.parent);
    for (int child : vertex.children)
      if (!g.in_domain(child)) visible = false;
    if (!visible) continue;
    if (!table.contains(vertex.diagram_vertex, local_action(g, v))) return false;
  }
  return true;
}

BallAutomorphism extend(const DeltaTree& tree, const LocalGroupTable& table, int w,
                        const Permutation& sigma, std::optional<int> fix_neighbour) {
  const DeltaTree::Vertex& base = tree.vertex(w);
  if (base.depth >= tree.radius())
    throw BoundaryVertexError("cannot extend from a boundary vertex");
  const Diagram& diagram = tree.diagram();
  std::vector<std::string> universe = diagram.vertex_universe(base.diagram_vertex);
  if (sigma.degree() != universe.size())
    throw NotInLocalGroupError("sigma degree does not match the local universe");
  if (!table.contains(base.diagram_vertex, sigma))
    throw NotInLocalGroupError("sigma is not an element of the local action");
  auto index_of = [&universe](const std::string& colour) {
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (universe[i] == colour) return static_cast<std::uint32_t>(i);
    throw Error("colour missing from the local universe");
  };
  if (fix_neighbour) {
    std::uint32_t label = index_of(tree.arc_label(w, *fix_neighbour));
    if (sigma(label) != label)
      throw ColourNotFixedError("sigma moves the colour of the fixed arc");
  }

  BallAutomorphism g = BallAutomorphism::empty(tree);
  g.set_image(w, w);

  // Traverse outwards from w; each reached vertex x already has an image and
  // carries the transport permutation matching its remaining arcs to the
  // image's. The transport is the identity whenever the arc labels agree,
  // which in particular fixes the half-tree behind a sigma-fixed colour.
  struct Item {
    int vertex;
    int towards;  // neighbour through which x was reached (towards w), -1 at w
    Permutation transport;
  };
  std::vector<Item> queue{{w, -1, sigma}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Item item = queue[head];
    const DeltaTree::Vertex& x = tree.vertex(item.vertex);
    int x_image = g.image(item.vertex);
    std::vector<std::string> x_universe = diagram.vertex_universe(x.diagram_vertex);
    if (x.depth < tree.radius() && tree.vertex(x_image).depth >= tree.radius())
      continue;  // the image is a boundary vertex; the subtree stays unmapped
    for (std::size_t i = 0; i < x_universe.size(); ++i) {
      const std::string& colour = x_universe[i];
      int y = neighbour_via(tree, item.vertex, colour);
      if (y < 0 || y == item.towards) continue;
      const std::string& image_colour = x_universe[item.transport(
          static_cast<std::uint32_t>(i))];
      int y_image = neighbour_via(tree, x_image, image_colour);
      if (y_image < 0) continue;  // outside the truncation
      g.set_image(y, y_image);
      if (tree.vertex(y).depth >= tree.radius() &&
          tree.vertex(y_image).depth >= tree.radius())
        continue;  // boundary pair; nothing beyond it
      const std::string& back = tree.arc_label(y, item.vertex);
      const std::string& image_back = tree.arc_label(y_image, x_image);
      std::optional<Permutation> transport =
          table.transport(tree.vertex(y).diagram_vertex, back, image_back);
      if (!transport)
        throw Error("no transport element; the diagram violates the orbit condition");
      queue.push_back({y, item.vertex, std::move(*transport)});
    }
  }
  return g;
}

SearchOutcome stabiliser_search(const DeltaTree& tree, const LocalGroupTable& table,
                                const std::vector<int>& fixed, int inner,
                                std::size_t cap) {
  if (inner < 1 || inner > tree.radius() - 1)
    throw std::invalid_argument("inner must lie in [1, radius - 1]");
  bool root_fixed = false;
  for (int f : fixed) {
    if (f == tree.root()) root_fixed = true;
    if (tree.vertex(f).depth > tree.radius() - 2)
      throw std::invalid_argument("fixed vertices must have depth <= radius - 2");
  }
  if (!root_fixed)
    throw std::invalid_argument("the fixed set must contain the root");

  // Local actions are chosen for every vertex of depth < inner; everything
  // deeper extends with identity actions, so a fixed vertex below the horizon
  // is pinned exactly when its depth-`inner` ancestor is.
  std::vector<int> assign;
  for (int v = 0; v < static_cast<int>(tree.size()); ++v)
    if (tree.vertex(v).depth < inner) assign.push_back(v);
  std::set<int> must_fix;
  for (int f : fixed) {
    int v = f;
    while (tree.vertex(v).depth > inner) v = tree.vertex(v).parent;
    must_fix.insert(v);
  }

  BallAutomorphism g = BallAutomorphism::empty(tree);
  g.set_image(tree.root(), tree.root());
  std::size_t nodes = 0;
  SearchOutcome outcome;

  auto candidates = [&](int v) -> const std::vector<Permutation>& {
    const DeltaTree::Vertex& vertex = tree.vertex(v);
    if (vertex.parent < 0) return table.elements(vertex.diagram_vertex);
    // sigma must fix the reverse colour towards the parent; images in the
    // same fibre share it, so the constraint does not depend on the image.
    return table.stabiliser(vertex.diagram_vertex, vertex.rpath.back());
  };

  auto search = [&](auto&& self, std::size_t position) -> bool {
    if (position == assign.size()) {
      // All vertices of depth <= inner now carry images.
      bool mover = false;
      for (int v = 0; v < static_cast<int>(tree.size()) && !mover; ++v)
        if (g.image(v) >= 0 && g.image(v) != v) mover = true;
      if (!mover) return false;
      // Complete the map below the horizon with identity local actions:
      // every unmapped vertex follows its parent's image along its own
      // colour. Parent images share the parent's depth, so the step exists.
      BallAutomorphism full = g;
      for (int x = 0; x < static_cast<int>(tree.size()); ++x) {
        if (full.image(x) >= 0) continue;
        int parent_image = full.image(tree.vertex(x).parent);
        full.set_image(x,
                       neighbour_via(tree, parent_image, tree.vertex(x).path.back()));
      }
      outcome.element = full;
      return true;
    }
    int v = assign[position];
    int v_image = g.image(v);
    const DeltaTree::Vertex& vertex = tree.vertex(v);
    const std::vector<std::string> universe =
        tree.diagram().vertex_universe(vertex.diagram_vertex);
    for (const Permutation& sigma : candidates(v)) {
      if (++nodes > cap)
        throw CapExceededError("stabiliser search exceeded its node cap", nodes);
      bool ok = true;
      // Children of v map to children of its image along sigma.
      for (std::size_t i = 0; i < vertex.children.size() && ok; ++i) {
        int child = vertex.children[i];
        const std::string& colour = tree.vertex(child).path.back();
        std::uint32_t index = 0;
        for (std::size_t k = 0; k < universe.size(); ++k)
          if (universe[k] == colour) index = static_cast<std::uint32_t>(k);
        int child_image = neighbour_via(tree, v_image, universe[sigma(index)]);
        if (child_image < 0 ||
            (must_fix.count(child) && child_image != child)) {
          ok = false;
          break;
        }
        g.set_image(child, child_image);
      }
      if (ok && self(self, position + 1)) return true;
      for (int child : vertex.children) g.set_image(child, -1);
    }
    return false;
  };
  (void)search(search, 0);
  outcome.nodes = nodes;
  return outcome;
}

std::size_t ball_group_size(const DeltaTree& tree, const LocalGroupTable& table,
                            std::size_t cap) {
  std::size_t total = 1;
  for (int v = 0; v < static_cast<int>(tree.size()); ++v) {
    const DeltaTree::Vertex& vertex = tree.vertex(v);
    if (vertex.depth >= tree.radius()) continue;
    std::size_t choices =
        vertex.parent < 0
            ? table.elements(vertex.diagram_vertex).size()
            : table.stabiliser(vertex.diagram_vertex, vertex.rpath.back()).size();
    if (choices != 0 && total > cap / choices)
      throw CapExceededError("ball group enumeration exceeds the cap", total);
    total *= choices;
  }
  return total;
}

std::string describe(const BallAutomorphism& g) {
  const DeltaTree& tree = g.host();
  std::ostringstream out;
  for (int v : g.moved_vertices())
    out << path_label(tree.vertex(v).path) << " -> "
        << path_label(tree.vertex(g.image(v)).path) << "\n";
  for (int v = 0; v < static_cast<int>(tree.size()); ++v) {
    const DeltaTree::Vertex& vertex = tree.vertex(v);
    if (vertex.depth >= tree.radius() || !g.in_domain(v)) continue;
    bool visible = vertex.parent < 0 || g.in_domain(vertex.parent);
    for (int child : vertex.children)
      if (!g.in_domain(child)) visible = false;
    if (!visible) continue;
    Permutation sigma = local_action(g, v);
    if (sigma.is_identity()) continue;
    out << "sigma" << path_label(vertex.path) << " = "
        << format_cycles(sigma,
                         tree.diagram().vertex_universe(vertex.diagram_vertex))
        << "\n";
  }
  return out.str();
}

OracleReport oracle_consistency(const Diagram& diagram, const ActionTypeVerdict& type,
                                const DiscretenessVerdict& verdict, int fix_radius,
                                int ball_radius) {
  if (ball_radius < fix_radius + 2)
    throw std::invalid_argument("ball radius must be at least fix radius + 2");
  if (diagram.has_infinite_colours())
    throw UnbuildableRadiusError(
        "the oracle has no faithful finite truncation for infinite colour sets");

  OracleReport report;
  std::string base;
  std::optional<DiscreteWitness> witness;
  if (verdict.is_discrete()) {
    witness = discreteness_witness(diagram, type, verdict);
    base = witness->base_vertex;
  } else {
    switch (type.type) {
      case ActionType::FixedVertex:
      case ActionType::Inversion:
        base = type.witness_vertices.front();
        break;
      case ActionType::Horocyclic:
        base = diagram.core().vertex_id(0);
        break;
      default:
        base = type.witness_cotree->vertices.front();
        break;
    }
  }

  DeltaTree tree = DeltaTree::build(diagram, base, ball_radius);
  LocalGroupTable table(tree.diagram());

  if (verdict.is_discrete()) {
    std::vector<int> fixed;
    for (const std::vector<std::string>& path : witness->colour_paths) {
      std::optional<int> v = tree.find(path);
      if (!v)
        throw Error("witness path missing from the truncated tree: " +
                    path_label(path));
      if (tree.vertex(*v).depth > ball_radius - 2)
        throw Error("ball radius too small for the discreteness witness");
      fixed.push_back(*v);
    }
    SearchOutcome outcome = stabiliser_search(tree, table, fixed, ball_radius - 1);
    if (outcome.found()) {
      report.consistent = false;
      report.lines.push_back(
          "witness stabiliser contains a mover although the verdict is discrete");
    } else {
      report.lines.push_back("witness=" + witness->paths_text() +
                             " stabiliser trivial in the ball as expected");
    }
  } else {
    for (int rho = 1; rho <= fix_radius; ++rho) {
      SearchOutcome outcome =
          stabiliser_search(tree, table, tree.ball(rho), ball_radius - 1);
      if (outcome.found()) {
        report.lines.push_back("ball radius " + std::to_string(rho) +
                               ": found a mover fixing it, as expected");
      } else {
        report.consistent = false;
        report.lines.push_back("ball radius " + std::to_string(rho) +
                               ": stabiliser trivial although the verdict is "
                               "non-discrete");
      }
    }
  }
  return report;
}

}  // namespace lad
