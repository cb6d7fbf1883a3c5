#ifndef LAD_SGRAPH_HPP
#define LAD_SGRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lad/errors.hpp"

namespace lad {

// A Serre-style graph: vertices, arcs, origin/terminus maps and an involutive
// reversal with o(r(a)) = t(a). Edges are arc pairs {a, r(a)}; a loop with
// a = r(a) is non-orientable. Declaration order fixes all iteration orders.
class SerreGraph {
 public:
  int add_vertex(const std::string& id);

  // Declares one arc; its reverse may be declared later under reverse_id.
  int add_arc(const std::string& id, const std::string& from,
              const std::string& to, const std::string& reverse_id);

  // Non-orientable loop: r(a) = a.
  int add_self_reverse_loop(const std::string& id, const std::string& at);

  // Resolves reverse_id references; throws Error on undeclared names.
  void link_reverses();

  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t arc_count() const { return arc_ids_.size(); }
  const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
  const std::string& arc_id(int a) const { return arc_ids_[a]; }
  int vertex_index(const std::string& id) const;  // throws UnknownVertexError
  int arc_index(const std::string& id) const;     // throws Error
  bool has_vertex(const std::string& id) const;

  int origin(int a) const { return origin_[a]; }
  int terminus(int a) const { return terminus_[a]; }
  int reverse(int a) const { return reverse_[a]; }
  bool is_loop(int a) const { return origin_[a] == terminus_[a]; }
  bool is_non_orientable(int a) const { return reverse_[a] == a; }

  // Arcs with the given origin, in declaration order.
  const std::vector<int>& out_arcs(int v) const { return out_arcs_[v]; }

  // Number of edges (arc pairs; a non-orientable loop is one edge).
  std::size_t edge_count() const;

  // One canonical arc per edge, in declaration order of the earlier arc.
  std::vector<int> edge_representatives() const;

  // Violations of the Serre axioms or connectivity; empty means valid.
  std::vector<std::string> validate() const;

  bool is_connected() const;
  bool is_tree() const;

  // Cycle-graph recognition including the degenerate orders 1 and 2.
  std::optional<int> cycle_graph_order() const;

  // The two cyclic orientations; throws NotACycleGraphError.
  std::pair<std::vector<int>, std::vector<int>> cyclic_orientations() const;

  // Vertices strictly closer to t(a) than to o(a); throws NotATreeError.
  std::vector<int> half_tree(int a) const;

  // BFS distances; -1 for unreachable vertices.
  std::vector<int> distances_from(int v) const;

  // Subgraph induced by the given vertex set; arc ids are preserved and the
  // map from new arc index to old arc index is returned through arc_map.
  SerreGraph induced(const std::vector<int>& vertices,
                     std::vector<int>* arc_map = nullptr) const;

  // One DOT edge per arc pair, labelled with both arc ids; non-orientable
  // loops appear once with a self-reverse marker.
  std::string to_dot(const std::string& name = "sgraph") const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<std::string> arc_ids_;
  std::vector<int> origin_;
  std::vector<int> terminus_;
  std::vector<int> reverse_;                 // -1 until linked
  std::vector<std::string> reverse_names_;   // as declared
  std::vector<std::vector<int>> out_arcs_;
};

}  // namespace lad

#endif
