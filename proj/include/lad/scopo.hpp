#ifndef LAD_SCOPO_HPP
#define LAD_SCOPO_HPP

#include <optional>
#include <string>
#include <vector>

#include "lad/diagram.hpp"

namespace lad {

// A partial orientation of the diagram graph: core arcs plus periodic ray arc
// classes, with O and its reversal disjoint. A ray reference orients every
// repetition of that segment at once, which is the only finitely presentable
// shape on a periodic ray.
struct PartialOrientation {
  std::vector<ArcRef> arcs;

  bool contains(const ArcRef& ref) const;
};

enum class ScopoType { A, B, C };

// Attractor of the step map f_O: the union of its periodic orbits, or the
// unique end every orbit escapes to. Unoriented rays consist of fixed points
// and enter the attractor whole.
struct AttractorResult {
  std::vector<std::string> core_vertices;  // periodic core vertices, in order
  std::vector<std::string> whole_rays;     // rays contained in the attractor
  std::optional<std::string> end_ray;      // set iff the attractor is an end
};

// An induced subdiagram to which every outside vertex projects along a unique
// all-singleton path. Rays are kept or pruned whole.
struct Cotree {
  std::vector<std::string> vertices;  // core vertices, declaration order
  std::vector<std::string> rays;      // ids of rays contained in the cotree
  bool single_vertex = false;
  bool inversion_loop = false;        // one vertex with one non-orientable loop
  std::optional<int> cycle_order;     // set when the cotree is a cycle graph
};

enum class ActionType { FixedVertex, Inversion, Lineal, Horocyclic, Focal, General };

std::string to_string(ActionType type);

struct ActionTypeVerdict {
  ActionType type;
  // Witness data, populated per type: fixed vertices, the inverted loop, the
  // cotree, the all-singleton cyclic orientation, or the horocyclic ray.
  std::vector<std::string> witness_vertices;
  std::optional<std::string> witness_loop;
  std::optional<Cotree> witness_cotree;
  std::vector<std::string> witness_orientation;  // arc ids, Focal only
  std::optional<std::string> witness_ray;        // Horocyclic only

  std::string witness_text() const;
};

// Confluent + strongly confluent + all chosen arcs have singleton colour
// sets. Returns false for sets that are not partial orientations.
bool is_scopo(const Diagram& diagram, const PartialOrientation& orientation);

// Requires is_scopo. Classifies the orientation per its attractor: (a) the
// attractor spans a cotree and O points at it, (b) it carries a cycle of
// chosen arcs, (c) it is a single end.
std::pair<AttractorResult, ScopoType> attractor(const Diagram& diagram,
                                                const PartialOrientation& orientation);

// Fixpoint of confluent pruning: unprunable rays stay whole; core leaves with
// a singleton arc towards the remainder are deleted. The deletion order does
// not change the result; `preference` only reorders the search and exists for
// the order-invariance tests. Throws EmptyDiagramError.
Cotree minimal_cotree(const Diagram& diagram,
                      const std::vector<std::string>& preference = {});

// Vertices forming single-vertex cotrees: defined only when the diagram graph
// is a tree (otherwise empty).
std::vector<std::string> single_vertex_cotrees(const Diagram& diagram);

// Rays whose end has all arcs oriented towards it carrying singleton colour
// sets. Throws NotATreeError when the diagram graph is not a tree.
std::vector<std::string> horocyclic_ends(const Diagram& diagram);

// The action-type classification, probing shapes in decision-tree order.
ActionTypeVerdict classify(const Diagram& diagram);

// All scopos of a finite diagram, by backtracking over edges with confluence
// pruning; deterministic order. Throws Error on rays or more than max_edges
// edges.
std::vector<PartialOrientation> enumerate_scopos(const Diagram& diagram,
                                                 std::size_t max_edges = 16);

}  // namespace lad

#endif
