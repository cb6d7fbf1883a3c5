#include "lad/dtree.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lad {

namespace {

const char* kPalette[] = {"red",    "blue",   "green",  "orange",
                          "purple", "brown",  "cyan",   "magenta",
                          "gold",   "gray",   "pink",   "olive"};

std::string path_label(const std::vector<std::string>& path) {
  std::string out = "(";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += ",";
    out += path[i];
  }
  out += ")";
  return out;
}

}  // namespace

DeltaTree DeltaTree::build(const Diagram& diagram, const std::string& base,
                           int radius, ReversePolicy policy) {
  DeltaTree tree;
  tree.diagram_ = diagram.has_rays() ? diagram.truncate_rays(radius) : diagram;
  tree.radius_ = radius;
  tree.base_vertex_ = tree.diagram_.core().vertex_index(base);

  auto reverse_colour = [&](const std::string& colour) -> std::string {
    ArcRef reverse = tree.diagram_.ref_reverse(tree.diagram_.colour_type(colour));
    const ColourSet colours = tree.diagram_.ref_colours(reverse);
    if (colours.infinite || colours.colours.empty())
      throw UnbuildableRadiusError("reverse colour set unusable for colour " + colour);
    return policy == ReversePolicy::FirstColour ? colours.colours.front()
                                                : colours.colours.back();
  };

  Vertex root;
  root.diagram_vertex = tree.base_vertex_;
  tree.vertices_.push_back(std::move(root));

  for (std::size_t head = 0; head < tree.vertices_.size(); ++head) {
    if (tree.vertices_[head].depth >= radius) continue;
    int projected = tree.vertices_[head].diagram_vertex;
    if (tree.diagram_.is_frontier(projected))
      throw UnbuildableRadiusError(
          "radius reaches past the truncation frontier at vertex " +
          tree.diagram_.core().vertex_id(projected));
    bool infinite = false;
    std::vector<std::string> universe =
        tree.diagram_.vertex_universe(projected, &infinite);
    if (infinite)
      throw UnbuildableRadiusError(
          "infinite colour set reachable within the radius at vertex " +
          tree.diagram_.core().vertex_id(projected));
    std::string excluded = tree.vertices_[head].rpath.empty()
                               ? std::string()
                               : tree.vertices_[head].rpath.back();
    for (const std::string& colour : universe) {
      if (!tree.vertices_[head].rpath.empty() && colour == excluded) continue;
      Vertex child;
      child.path = tree.vertices_[head].path;
      child.path.push_back(colour);
      child.rpath = tree.vertices_[head].rpath;
      child.rpath.push_back(reverse_colour(colour));
      child.parent = static_cast<int>(head);
      child.depth = tree.vertices_[head].depth + 1;
      ArcRef ref = tree.diagram_.colour_type(colour);
      child.diagram_vertex = tree.diagram_.core().terminus(ref.core_arc);
      tree.vertices_[head].children.push_back(static_cast<int>(tree.vertices_.size()));
      tree.vertices_.push_back(std::move(child));
    }
  }
  return tree;
}

std::optional<int> DeltaTree::find(const std::vector<std::string>& path) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].path == path) return static_cast<int>(v);
  return std::nullopt;
}

int DeltaTree::project_vertex(int v) const {
  if (v < 0 || v >= static_cast<int>(vertices_.size()))
    throw UnknownElementError("vertex outside the tree");
  return vertices_[v].diagram_vertex;
}

const std::string& DeltaTree::arc_label(int from, int to) const {
  if (from >= 0 && from < static_cast<int>(vertices_.size()) &&
      to >= 0 && to < static_cast<int>(vertices_.size())) {
    if (vertices_[to].parent == from) return vertices_[to].path.back();
    if (vertices_[from].parent == to) return vertices_[from].rpath.back();
  }
  throw UnknownElementError("not an arc of the tree");
}

int DeltaTree::project_arc(int from, int to) const {
  return diagram_.colour_type(arc_label(from, to)).core_arc;
}

std::vector<int> DeltaTree::ball(int r) const {
  std::vector<int> result;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].depth <= r) result.push_back(static_cast<int>(v));
  return result;
}

std::string DeltaTree::to_dot() const {
  std::ostringstream out;
  out << "digraph dtree {\n  node [style=filled];\n";
  constexpr std::size_t palette_size = sizeof(kPalette) / sizeof(kPalette[0]);
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    out << "  n" << v << " [label=\"" << path_label(vertices_[v].path)
        << "\" fillcolor=" << kPalette[vertices_[v].diagram_vertex % palette_size]
        << " diagram_vertex=\"" << diagram_.core().vertex_id(vertices_[v].diagram_vertex)
        << "\"];\n";
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    int parent = vertices_[v].parent;
    if (parent < 0) continue;
    out << "  n" << parent << " -> n" << v << " [label=\""
        << vertices_[v].path.back() << "\"];\n";
    out << "  n" << v << " -> n" << parent << " [label=\""
        << vertices_[v].rpath.back() << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<std::string> check_colouring(const DeltaTree& tree) {
  std::vector<std::string> violations;
  const Diagram& diagram = tree.diagram();
  for (int v = 0; v < static_cast<int>(tree.size()); ++v) {
    const DeltaTree::Vertex& vertex = tree.vertex(v);
    if (vertex.depth >= tree.radius()) continue;  // boundary vertices exempt

    std::vector<std::string> labels;
    if (vertex.parent >= 0) labels.push_back(vertex.rpath.back());
    for (int child : vertex.children) labels.push_back(tree.vertex(child).path.back());

    std::vector<std::string> expected = diagram.vertex_universe(vertex.diagram_vertex);
    std::vector<std::string> sorted_labels = labels;
    std::sort(sorted_labels.begin(), sorted_labels.end());
    std::sort(expected.begin(), expected.end());
    if (sorted_labels != expected) {
      violations.push_back("vertex " + path_label(vertex.path) +
                           ": arc labels are not a bijection onto the projected "
                           "colour universe");
      continue;
    }
    // Fibre respect: child arcs project to arcs leaving the projected vertex,
    // and the reverse label lies on the reverse arc of the last path colour.
    for (int child : vertex.children) {
      ArcRef ref = diagram.colour_type(tree.vertex(child).path.back());
      if (diagram.core().origin(ref.core_arc) != vertex.diagram_vertex)
        violations.push_back("vertex " + path_label(vertex.path) +
                             ": child colour lies on an arc not leaving the "
                             "projected vertex");
    }
    if (vertex.parent >= 0) {
      ArcRef down = diagram.colour_type(vertex.path.back());
      ArcRef up = diagram.colour_type(vertex.rpath.back());
      if (!(diagram.ref_reverse(down) == up))
        violations.push_back("vertex " + path_label(vertex.path) +
                             ": reverse label is not on the reverse arc");
    }
  }
  return violations;
}

std::size_t expected_vertex_count(const Diagram& diagram, const std::string& base,
                                  int radius) {
  Diagram finite = diagram.has_rays() ? diagram.truncate_rays(radius) : diagram;
  const SerreGraph& core = finite.core();
  // count(v, back, r): paths of length <= r continuing from v after entering
  // along `back` (or -1 at the base). One colour of the back arc is excluded.
  std::map<std::tuple<int, int, int>, std::size_t> memo;
  auto count = [&](auto&& self, int v, int back, int r) -> std::size_t {
    if (r == 0) return 1;
    auto key = std::make_tuple(v, back, r);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool infinite = false;
    (void)finite.vertex_universe(v, &infinite);
    if (infinite || finite.is_frontier(v))
      throw UnbuildableRadiusError("count reaches an unexpandable vertex");
    std::size_t total = 1;
    for (int a : core.out_arcs(v)) {
      std::size_t width = finite.colour_set(a).colours.size();
      if (a == back) width -= 1;
      if (width == 0) continue;
      total += width * self(self, core.terminus(a), core.reverse(a), r - 1);
    }
    memo[key] = total;
    return total;
  };
  return count(count, core.vertex_index(base), -1, radius);
}

}  // namespace lad
