#ifndef LAD_DISCRETE_HPP
#define LAD_DISCRETE_HPP

#include <string>
#include <vector>

#include "lad/diagram.hpp"
#include "lad/scopo.hpp"

namespace lad {

enum class Discreteness { Discrete, NonDiscrete };

struct DiscretenessVerdict {
  Discreteness verdict;
  ActionType type;
  std::string clause;   // deciding rule, e.g. "general-semiregular"
  std::string detail;   // violated condition for NonDiscrete, else empty
  // Symbolic flags this verdict trusted, for auditing.
  std::vector<std::string> consumed_flags;

  bool is_discrete() const { return verdict == Discreteness::Discrete; }
};

// A finite set F of tree vertices, given as coloured paths from a base
// diagram vertex, whose pointwise stabiliser in the universal group is
// trivial. When the construction would need data of an infinite colour set it
// is flagged symbolic and carries no paths.
struct DiscreteWitness {
  std::string base_vertex;
  std::vector<std::vector<std::string>> colour_paths;
  bool symbolic = false;
  std::string description;

  std::string paths_text() const;  // e.g. "();(1);(1.2n)"
};

// One clause per action type: fixed vertex and inversion require almost-all
// trivial actions plus finite bases at infinite-degree vertices, lineal
// requires all-trivial actions, horocyclic and focal are never discrete, and
// general requires semiregularity on the smallest cotree and triviality
// outside it. Semiregularity checks may throw CapExceededError.
DiscretenessVerdict decide(const Diagram& diagram, const ActionTypeVerdict& type);

// Witness set construction for discrete verdicts; throws NotDiscreteError on
// non-discrete input. Lineal: a single vertex. General: a single arc. Fixed
// vertex / inversion: paths over iterated bases, extended along every arc
// whose far side carries a non-trivial action.
DiscreteWitness discreteness_witness(const Diagram& diagram,
                                     const ActionTypeVerdict& type,
                                     const DiscretenessVerdict& verdict);

}  // namespace lad

#endif
