#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "lad/sgraph.hpp"
#include "support.hpp"

using lad::SerreGraph;

namespace {

SerreGraph path3() {
  SerreGraph g;
  g.add_vertex("u");
  g.add_vertex("v");
  g.add_vertex("w");
  g.add_arc("a", "u", "v", "b");
  g.add_arc("b", "v", "u", "a");
  g.add_arc("c", "v", "w", "d");
  g.add_arc("d", "w", "v", "c");
  g.link_reverses();
  return g;
}

SerreGraph loop_pair() {
  SerreGraph g;
  g.add_vertex("v");
  g.add_arc("a", "v", "v", "b");
  g.add_arc("b", "v", "v", "a");
  g.link_reverses();
  return g;
}

SerreGraph triangle() {
  SerreGraph g;
  for (const char* v : {"x", "y", "z"}) g.add_vertex(v);
  g.add_arc("xy", "x", "y", "yx");
  g.add_arc("yx", "y", "x", "xy");
  g.add_arc("yz", "y", "z", "zy");
  g.add_arc("zy", "z", "y", "yz");
  g.add_arc("zx", "z", "x", "xz");
  g.add_arc("xz", "x", "z", "zx");
  g.link_reverses();
  return g;
}

}  // namespace

TEST_CASE("serre axioms") {
  SerreGraph single;
  single.add_vertex("v");
  single.link_reverses();
  CHECK(single.validate().empty());

  SerreGraph edge;
  edge.add_vertex("u");
  edge.add_vertex("v");
  edge.add_arc("a", "u", "v", "b");
  edge.add_arc("b", "v", "u", "a");
  edge.link_reverses();
  CHECK(edge.validate().empty());

  // A self-reverse arc between distinct vertices violates o(r(a)) = t(a).
  SerreGraph bad;
  bad.add_vertex("u");
  bad.add_vertex("v");
  bad.add_arc("a", "u", "v", "a");
  bad.link_reverses();
  auto violations = bad.validate();
  REQUIRE_FALSE(violations.empty());
  CHECK(violations.front().find("a") != std::string::npos);

  SerreGraph disconnected;
  disconnected.add_vertex("u");
  disconnected.add_vertex("v");
  disconnected.link_reverses();
  CHECK_FALSE(disconnected.validate().empty());
}

TEST_CASE("tree recognition") {
  CHECK(path3().is_tree());

  SerreGraph looped;
  looped.add_vertex("v");
  looped.add_self_reverse_loop("l", "v");
  looped.link_reverses();
  CHECK_FALSE(looped.is_tree());

  SerreGraph parallel;
  parallel.add_vertex("u");
  parallel.add_vertex("v");
  parallel.add_arc("a", "u", "v", "b");
  parallel.add_arc("b", "v", "u", "a");
  parallel.add_arc("c", "u", "v", "d");
  parallel.add_arc("d", "v", "u", "c");
  parallel.link_reverses();
  CHECK(parallel.validate().empty());
  CHECK_FALSE(parallel.is_tree());  // two edges form a cycle of length 2
  CHECK(parallel.cycle_graph_order() == 2);
}

TEST_CASE("cycle graphs including degenerate orders") {
  CHECK(loop_pair().cycle_graph_order() == 1);
  CHECK(triangle().cycle_graph_order() == 3);

  SerreGraph non_orientable;
  non_orientable.add_vertex("v");
  non_orientable.add_self_reverse_loop("l", "v");
  non_orientable.link_reverses();
  CHECK_FALSE(non_orientable.cycle_graph_order().has_value());

  CHECK_FALSE(path3().cycle_graph_order().has_value());
  CHECK_THROWS_AS(path3().cyclic_orientations(), lad::NotACycleGraphError);
}

TEST_CASE("cyclic orientations") {
  auto [f1, b1] = loop_pair().cyclic_orientations();
  CHECK(f1 == std::vector<int>{0});
  CHECK(b1 == std::vector<int>{1});

  for (const SerreGraph& g : {triangle()}) {
    auto [forward, backward] = g.cyclic_orientations();
    CHECK(forward.size() == g.vertex_count());
    CHECK(backward.size() == g.vertex_count());
    // Mutual reversal and one outgoing arc per vertex.
    std::set<int> all(forward.begin(), forward.end());
    for (int a : backward) {
      CHECK_FALSE(all.count(a));
      all.insert(a);
    }
    CHECK(all.size() == g.arc_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      int chosen = 0;
      for (int a : g.out_arcs(static_cast<int>(v)))
        if (std::find(forward.begin(), forward.end(), a) != forward.end()) ++chosen;
      CHECK(chosen == 1);
    }
  }
}

TEST_CASE("half trees") {
  SerreGraph edge;
  edge.add_vertex("u");
  edge.add_vertex("v");
  edge.add_arc("a", "u", "v", "b");
  edge.add_arc("b", "v", "u", "a");
  edge.link_reverses();
  CHECK(edge.half_tree(0) == std::vector<int>{1});

  SerreGraph p = path3();
  CHECK(p.half_tree(p.arc_index("a")) == std::vector<int>{1, 2});

  // Partition property on every arc.
  for (int a = 0; a < static_cast<int>(p.arc_count()); ++a) {
    auto head = p.half_tree(a);
    auto tail = p.half_tree(p.reverse(a));
    CHECK(head.size() + tail.size() == p.vertex_count());
    std::set<int> all(head.begin(), head.end());
    for (int v : tail) CHECK(all.insert(v).second);
  }

  CHECK_THROWS_AS(loop_pair().half_tree(0), lad::NotATreeError);
}

TEST_CASE("reversal involution on random cores") {
  testsupport::Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    lad::Diagram d = testsupport::random_diagram(rng);
    const SerreGraph& g = d.core();
    CHECK(g.validate().empty());
    for (int a = 0; a < static_cast<int>(g.arc_count()); ++a) {
      CHECK(g.reverse(g.reverse(a)) == a);
      CHECK(g.origin(g.reverse(a)) == g.terminus(a));
    }
    if (auto order = g.cycle_graph_order()) {
      CHECK(static_cast<std::size_t>(*order) == g.vertex_count());
      CHECK(g.edge_count() == g.vertex_count());
    }
  }
}

TEST_CASE("dot emission") {
  SerreGraph g;
  g.add_vertex("v");
  g.add_self_reverse_loop("l", "v");
  g.link_reverses();
  std::string dot = g.to_dot("x");
  CHECK(dot.find("self-reverse") != std::string::npos);
  CHECK(dot == g.to_dot("x"));

  std::string edge_dot = path3().to_dot();
  CHECK(edge_dot.find("\"a / b\"") != std::string::npos);
}
