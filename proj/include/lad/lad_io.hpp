#ifndef LAD_LAD_IO_HPP
#define LAD_LAD_IO_HPP

#include <string>

#include "lad/diagram.hpp"

namespace lad {

// Parses the line-oriented `.lad` format:
//
//   # comment
//   vertex <id>
//   arc <id> from <v> to <w> reverse <id'> colours <c1> <c2> ...
//   arc <id> from <v> to <w> reverse <id'> colours infinite <name>
//   loop <id> at <v> self-reverse colours <c1> ...
//   action <v> gens <cycles>; <cycles>; ...
//   action <v> symbolic trivial=<bool> semiregular=<bool> finite_base=<bool>
//          orbits <arc>:<size|inf> ...
//   ray <id> at <v> period <p>
//   segment <k> action <gens|trivial> out <colours> in <colours>
//
// Each arc of a pair is declared on its own line; reverse declarations must be
// symmetric. A segment's action acts on its `in` colours together with the
// NEXT segment's `out` colours (wrapping to segment 0 for the next period).
// Throws LadParseError with a line number on malformed or unresolvable input.
// Structural problems (empty colour sets, orbit mismatches, ...) are left to
// Diagram::validate().
Diagram load_diagram(const std::string& text);

// Deterministic canonical emission; load(save(d)) is structurally equal to d
// for every valid source diagram.
std::string save_diagram(const Diagram& diagram);

}  // namespace lad

#endif
