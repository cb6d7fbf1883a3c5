#ifndef LAD_DTREE_HPP
#define LAD_DTREE_HPP

#include <optional>
#include <string>
#include <vector>

#include "lad/diagram.hpp"

namespace lad {

// Which colour of the reverse arc a vertex's reverse path uses. Any policy
// yields isomorphic trees; FirstColour is the default used everywhere, the
// alternative exists for the isomorphism property tests.
enum class ReversePolicy { FirstColour, LastColour };

// A bounded-radius tree of coloured paths over a finite diagram, with the
// colouring L and the projection onto the diagram. Vertices are keyed by
// their colour sequence; arcs are the prefix pairs. Immutable once built.
class DeltaTree {
 public:
  struct Vertex {
    std::vector<std::string> path;     // colour sequence from the root
    std::vector<std::string> rpath;    // chosen reverse sequence
    int parent = -1;                   // -1 for the root
    int depth = 0;
    int diagram_vertex = 0;            // projection
    std::vector<int> children;         // in colour declaration order
  };

  // Builds all admissible coloured paths of length <= radius from the base.
  // Diagrams with rays are truncated to `radius` repetitions first. Throws
  // UnknownVertexError and UnbuildableRadiusError.
  static DeltaTree build(const Diagram& diagram, const std::string& base,
                         int radius, ReversePolicy policy = ReversePolicy::FirstColour);

  const Diagram& diagram() const { return diagram_; }
  int radius() const { return radius_; }
  std::size_t size() const { return vertices_.size(); }
  const Vertex& vertex(int v) const { return vertices_[v]; }
  int root() const { return 0; }

  // Vertex index of the given colour path, if present.
  std::optional<int> find(const std::vector<std::string>& path) const;

  // Projection of a tree vertex / of the arc from `from` towards an adjacent
  // vertex `to`. Throws UnknownElementError.
  int project_vertex(int v) const;
  int project_arc(int from, int to) const;

  // L-value of the arc from `from` to the adjacent vertex `to`.
  const std::string& arc_label(int from, int to) const;

  // All vertices with depth <= r, in BFS order.
  std::vector<int> ball(int r) const;

  // Vertices labelled by colour sequences, coloured by projected diagram
  // vertex; both arc directions with their L-labels.
  std::string to_dot() const;

  // Test hook: mutates a stored vertex. check_colouring flags the damage.
  Vertex& mutable_vertex_for_test(int v) { return vertices_[v]; }

 private:
  Diagram diagram_;
  int radius_ = 0;
  int base_vertex_ = 0;
  std::vector<Vertex> vertices_;
};

// Verifies that L restricts to bijections onto the projected colour universe
// at every vertex of depth < radius, respecting arc fibres; boundary vertices
// are exempt. Violations are returned as data.
std::vector<std::string> check_colouring(const DeltaTree& tree);

// Independent closed-form count of the coloured paths of length <= radius: a
// product of (degree - 1) factors along projected paths. Used to cross-check
// build().
std::size_t expected_vertex_count(const Diagram& diagram, const std::string& base,
                                  int radius);

}  // namespace lad

#endif
