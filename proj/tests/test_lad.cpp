#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lad/corpus.hpp"
#include "lad/lad_io.hpp"
#include "support.hpp"

using lad::ColourSet;
using lad::Diagram;
using lad::LadParseError;
using lad::load_diagram;
using lad::save_diagram;

namespace {

bool has_violation(const std::vector<std::string>& violations, const std::string& part) {
  for (const std::string& v : violations)
    if (v.find(part) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("corpus entries load and validate") {
  for (const lad::CorpusEntry& entry : lad::corpus()) {
    INFO(entry.name);
    Diagram d = load_diagram(entry.source);
    CHECK(d.validate().empty());
  }
}

TEST_CASE("orbit partition mismatch is a violation") {
  Diagram d = load_diagram(R"(vertex u
vertex v
arc a from u to v reverse b colours 1 2
arc c from u to v reverse e colours 3
arc b from v to u reverse a colours 4
arc e from v to u reverse c colours 5
action u gens (1 2 3)
action v gens
)");
  CHECK(has_violation(d.validate(), "orbits"));
}

TEST_CASE("empty colour set is a violation, not a parse error") {
  Diagram d = load_diagram(R"(vertex u
vertex v
arc a from u to v reverse b colours
arc b from v to u reverse a colours 1
action u gens
action v gens
)");
  CHECK(has_violation(d.validate(), "empty colour set"));
}

TEST_CASE("colour type lookup") {
  Diagram d = load_diagram(lad::corpus_entry("u-s2-a3").source);
  lad::ArcRef two = d.colour_type("2");
  CHECK_FALSE(two.is_ray);
  CHECK(d.core().arc_id(two.core_arc) == "a");
  CHECK(d.core().arc_id(d.colour_type("1'").core_arc) == "b");
  CHECK_THROWS_AS(d.colour_type("z"), lad::UnknownColourError);
}

TEST_CASE("chosen reverse colour follows declaration order") {
  Diagram d = load_diagram(lad::corpus_entry("u-s2-a3").source);
  CHECK(d.chosen_reverse_colour("1") == "1'");
  CHECK(d.chosen_reverse_colour("2") == "1'");
  CHECK(d.chosen_reverse_colour("2'") == "1");
}

TEST_CASE("ray truncation") {
  Diagram d = load_diagram(lad::corpus_entry("fixed-vertex-T3").source);

  Diagram depth2 = d.truncate_rays(2);
  CHECK(depth2.validate().empty());
  CHECK(depth2.core().vertex_count() == 4);  // v0, v1, r.v1, r.v2
  CHECK_FALSE(depth2.has_rays());
  CHECK(depth2.is_frontier(depth2.core().vertex_index("r.v2")));
  CHECK_FALSE(depth2.is_frontier(depth2.core().vertex_index("r.v1")));
  // Second repetition renames its colours.
  CHECK(depth2.core().arc_id(depth2.colour_type("2n@1").core_arc) == "r.o2");

  Diagram depth0 = d.truncate_rays(0);
  CHECK(depth0.core().vertex_count() == 2);
  CHECK(depth0.is_frontier(depth0.core().vertex_index("v1")));
  CHECK(depth0.validate().empty());

  // Truncating a ray-free diagram is the identity.
  Diagram finite = load_diagram(lad::corpus_entry("u-s2-a3").source);
  CHECK(structurally_equal(finite.truncate_rays(3), finite));

  // Deeper truncations contain shallower ones as a prefix.
  Diagram depth3 = d.truncate_rays(3);
  for (int v = 0; v < static_cast<int>(depth2.core().vertex_count()); ++v)
    CHECK(depth3.core().vertex_id(v) == depth2.core().vertex_id(v));
  for (int a = 0; a < static_cast<int>(depth2.core().arc_count()); ++a)
    CHECK(depth3.core().arc_id(a) == depth2.core().arc_id(a));
}

TEST_CASE("load and save round-trip") {
  for (const lad::CorpusEntry& entry : lad::corpus()) {
    INFO(entry.name);
    Diagram d = load_diagram(entry.source);
    std::string text = save_diagram(d);
    Diagram reloaded = load_diagram(text);
    CHECK(structurally_equal(d, reloaded));
    CHECK(save_diagram(reloaded) == text);  // canonical form is a fixpoint
  }
}

TEST_CASE("parse errors carry line numbers") {
  try {
    load_diagram("vertex u\narc a from u to u reverse zz colours 1\n");
    FAIL("expected LadParseError");
  } catch (const LadParseError& error) {
    CHECK(error.line == 2);
    CHECK(std::string(error.what()).find("undeclared") != std::string::npos);
  }
  CHECK_THROWS_AS(load_diagram("nonsense line\n"), LadParseError);
  CHECK_THROWS_AS(load_diagram("vertex u\naction w gens\n"), LadParseError);
  CHECK_THROWS_AS(load_diagram("vertex u\nvertex u\n"), LadParseError);
  // Asymmetric reverse declarations.
  CHECK_THROWS_AS(load_diagram(R"(vertex u
vertex v
arc a from u to v reverse b colours 1
arc b from v to u reverse c colours 2
arc c from u to v reverse b colours 3
)"),
                  LadParseError);
}

TEST_CASE("symbolic actions") {
  const char* source = R"(vertex v
vertex u
arc a from v to u reverse b colours infinite I
arc b from u to v reverse a colours 1'
action v symbolic trivial=false semiregular=false finite_base=true orbits a:inf
action u gens
)";
  Diagram d = load_diagram(source);
  CHECK(d.validate().empty());
  CHECK(d.has_infinite_colours());

  // Round-trip keeps the symbolic declaration.
  CHECK(structurally_equal(load_diagram(save_diagram(d)), d));

  // A trivial symbolic action is inconsistent with an infinite colour set.
  Diagram bad = load_diagram(R"(vertex v
vertex u
arc a from v to u reverse b colours infinite I
arc b from u to v reverse a colours 1'
action v symbolic trivial=true semiregular=true finite_base=true orbits a:inf
action u gens
)");
  CHECK(has_violation(bad.validate(), "incompatible"));

  // Symbolic actions need an infinite colour set.
  Diagram finite_symbolic = load_diagram(R"(vertex v
vertex u
arc a from v to u reverse b colours 1
arc b from u to v reverse a colours 1'
action v symbolic trivial=false semiregular=true finite_base=true orbits a:1
action u gens
)");
  CHECK(has_violation(finite_symbolic.validate(), "symbolic"));

  // Declared orbit sizes must match the colour sets.
  Diagram wrong_size = load_diagram(R"(vertex v
vertex u
arc a from v to u reverse b colours infinite I
arc b from u to v reverse a colours 1'
action v symbolic trivial=false semiregular=false finite_base=true orbits a:3
action u gens
)");
  CHECK(has_violation(wrong_size.validate(), "orbit size"));

  // An explicit action cannot act on an infinite universe.
  Diagram explicit_infinite = load_diagram(R"(vertex v
vertex u
arc a from v to u reverse b colours infinite I
arc b from u to v reverse a colours 1'
action v gens
action u gens
)");
  CHECK(has_violation(explicit_infinite.validate(), "infinite"));
}

TEST_CASE("duplicate colours are reported") {
  Diagram d = load_diagram(R"(vertex u
vertex v
arc a from u to v reverse b colours 1
arc b from v to u reverse a colours 1
action u gens
action v gens
)");
  CHECK(has_violation(d.validate(), "disjoint"));
}

TEST_CASE("random diagrams round-trip") {
  testsupport::Rng rng(424242);
  for (int trial = 0; trial < 60; ++trial) {
    Diagram d = testsupport::random_diagram(rng);
    REQUIRE(d.validate().empty());
    Diagram reloaded = load_diagram(save_diagram(d));
    CHECK(structurally_equal(d, reloaded));
  }
}
