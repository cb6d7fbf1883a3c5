#ifndef LAD_UGROUP_HPP
#define LAD_UGROUP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lad/discrete.hpp"
#include "lad/dtree.hpp"
#include "lad/perm.hpp"
#include "lad/scopo.hpp"

namespace lad {

// Enumerated local groups of a finite diagram, with point stabiliser
// sublists: the candidate sets for membership tests and the stabiliser
// search. Element order is the deterministic BFS enumeration order.
class LocalGroupTable {
 public:
  explicit LocalGroupTable(const Diagram& diagram, std::size_t cap = kEnumerationCap);

  const PermGroup& group(int vertex) const { return groups_[vertex]; }
  const std::vector<Permutation>& elements(int vertex) const {
    return elements_[vertex];
  }
  // Elements fixing the given point, in enumeration order (identity first).
  const std::vector<Permutation>& stabiliser(int vertex, const std::string& point) const;
  bool contains(int vertex, const Permutation& g) const;
  // First enumerated element mapping `from` to `to`.
  std::optional<Permutation> transport(int vertex, const std::string& from,
                                       const std::string& to) const;

 private:
  std::vector<PermGroup> groups_;
  std::vector<std::vector<Permutation>> elements_;
  mutable std::vector<std::map<std::string, std::vector<Permutation>>> stabilisers_;
};

// A finite partial automorphism of a truncated Delta-tree: a bijection
// between two vertex subsets preserving adjacency and the projection.
class BallAutomorphism {
 public:
  static BallAutomorphism identity(const DeltaTree& tree);
  static BallAutomorphism empty(const DeltaTree& tree);

  const DeltaTree& host() const { return *host_; }
  bool in_domain(int v) const { return image_[v] >= 0; }
  int image(int v) const { return image_[v]; }
  void set_image(int v, int w) { image_[v] = w; }

  bool fixes(int v) const { return image_[v] == v; }
  std::vector<int> moved_vertices() const;
  bool is_identity_map() const;

  // Applies *this first, then other, on the common domain.
  BallAutomorphism then(const BallAutomorphism& other) const;
  BallAutomorphism inverse() const;

 private:
  const DeltaTree* host_ = nullptr;
  std::vector<int> image_;
};

// sigma_{L,v}: the permutation of the projected colour universe induced at v.
// Requires v, its parent and children, and their images to be known; throws
// BoundaryVertexError otherwise.
Permutation local_action(const BallAutomorphism& g, int v);

// Internal respect at every vertex whose whole out-neighbourhood is visible
// in the domain: the induced local action lies in the local group there.
bool is_member(const BallAutomorphism& g, const LocalGroupTable& table);

// The extension construction: an automorphism fixing w, realising sigma at w,
// extended outwards with the first transport element (the identity whenever
// colours already match). If fix_neighbour is given, sigma must fix the label
// of the arc towards it, and the half-tree beyond stays pointwise fixed.
// Throws NotInLocalGroupError, ColourNotFixedError, BoundaryVertexError.
BallAutomorphism extend(const DeltaTree& tree, const LocalGroupTable& table, int w,
                        const Permutation& sigma,
                        std::optional<int> fix_neighbour = std::nullopt);

struct SearchOutcome {
  std::optional<BallAutomorphism> element;
  std::size_t nodes = 0;

  bool found() const { return element.has_value(); }
};

// Backtracking search for an automorphism with internal respect below the
// boundary that fixes `fixed` pointwise and moves some vertex of depth at
// most `inner`. Local actions are assigned level by level in enumeration
// order; the first mover found is returned, so results are deterministic.
// The root must belong to `fixed` (the search is over depth-preserving
// maps). Throws CapExceededError after `cap` assignments.
SearchOutcome stabiliser_search(const DeltaTree& tree, const LocalGroupTable& table,
                                const std::vector<int>& fixed, int inner,
                                std::size_t cap = 1000000);

// Order of the group of root-fixing ball automorphisms with internal respect
// at every interior vertex. Throws CapExceededError beyond the cap.
std::size_t ball_group_size(const DeltaTree& tree, const LocalGroupTable& table,
                            std::size_t cap = 1000000);

// Moved-vertex pairs plus the non-trivial local action values, one per line.
std::string describe(const BallAutomorphism& g);

struct OracleReport {
  bool consistent = true;
  std::vector<std::string> lines;
};

// Cross-validates a discreteness verdict against the truncated ball: discrete
// verdicts must leave the witness-set stabiliser trivial, non-discrete ones
// must admit movers fixing every ball up to the fix radius. Requires
// ball_radius >= fix_radius + 2; refuses diagrams with infinite colour sets.
OracleReport oracle_consistency(const Diagram& diagram, const ActionTypeVerdict& type,
                                const DiscretenessVerdict& verdict, int fix_radius,
                                int ball_radius);

}  // namespace lad

#endif
