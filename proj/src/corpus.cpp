#include "lad/corpus.hpp"

#include "lad/errors.hpp"

namespace lad {

namespace {

// Quotient data of vertex stabilisers, edge stabilisers and friends acting on
// the 3-regular tree, plus the two-vertex amalgam diagram and two small
// auxiliary diagrams. Rays encode the eventually periodic tails of the
// infinite quotient graphs.

const char* kFixedVertexT3 = R"(# full stabiliser of a vertex of the 3-regular tree
vertex v0
vertex v1
arc a from v0 to v1 reverse b colours 1 2 3
arc b from v1 to v0 reverse a colours 1'
action v0 gens (1 2 3); (1 2)
action v1 gens (2n 3n)
ray r at v1 period 1
segment 0 action (2n 3n) out 2n 3n in 1r
)";

const char* kInversionT3 = R"(# setwise stabiliser of an edge of the 3-regular tree
vertex v0
loop l at v0 self-reverse colours 1
action v0 gens (2 3)
ray r at v0 period 1
segment 0 action (2 3) out 2 3 in 1r
)";

const char* kLinealT3 = R"(# stabiliser of a pair of ends of the 3-regular tree
vertex v0
vertex v1
arc c1 from v0 to v0 reverse c2 colours 1
arc c2 from v0 to v0 reverse c1 colours 2
arc a from v0 to v1 reverse b colours 3
arc b from v1 to v0 reverse a colours 1'
action v0 gens
action v1 gens (2n 3n)
ray r at v1 period 1
segment 0 action (2n 3n) out 2n 3n in 1r
)";

const char* kHorocyclicT3 = R"(# vertex-fixing part of an end stabiliser of the 3-regular tree
vertex v0
action v0 gens (r2 r3)
ray left at v0 period 1
segment 0 action (l2 l3) out l1 in l2 l3
ray right at v0 period 1
segment 0 action (r2 r3) out r2 r3 in r1
)";

const char* kFocalT3 = R"(# full stabiliser of an end of the 3-regular tree
vertex v0
arc a from v0 to v0 reverse b colours 1
arc b from v0 to v0 reverse a colours 2 3
action v0 gens (2 3)
)";

const char* kGeneralAutT3 = R"(# full automorphism group of the 3-regular tree
vertex v0
loop l at v0 self-reverse colours 1 2 3
action v0 gens (1 2 3); (1 2)
)";

const char* kUS2A3 = R"(# two-vertex diagram with S2 and A3 local actions
vertex v0
vertex v1
arc a from v0 to v1 reverse b colours 1 2
arc b from v1 to v0 reverse a colours 1' 2' 3'
action v0 gens (1 2)
action v1 gens (1' 2' 3')
)";

const char* kLinealZ = R"(# the integers translating the line
vertex v0
arc a from v0 to v0 reverse b colours 1
arc b from v0 to v0 reverse a colours 2
action v0 gens
)";

const char* kSingleEdgeInversion = R"(# order two, inverting a single edge
vertex v0
loop l at v0 self-reverse colours 1
action v0 gens
)";

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"fixed-vertex-T3", kFixedVertexT3, "FixedVertex", false},
      {"inversion-T3", kInversionT3, "Inversion", false},
      {"lineal-T3", kLinealT3, "Lineal", false},
      {"horocyclic-T3", kHorocyclicT3, "Horocyclic", false},
      {"focal-T3", kFocalT3, "Focal", false},
      {"general-autT3", kGeneralAutT3, "General", false},
      {"u-s2-a3", kUS2A3, "General", true},
      {"lineal-Z", kLinealZ, "Lineal", true},
      {"single-edge-inversion", kSingleEdgeInversion, "Inversion", true},
  };
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const CorpusEntry& entry : corpus())
    if (entry.name == name) return entry;
  throw Error("unknown corpus entry: " + name);
}

}  // namespace lad
