// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits non-zero when any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "lad/corpus.hpp"
#include "lad/discrete.hpp"
#include "lad/dtree.hpp"
#include "lad/lad_io.hpp"
#include "lad/scopo.hpp"
#include "lad/ugroup.hpp"
#include "support.hpp"

using namespace lad;

namespace {

int failures = 0;

struct Criterion {
  std::string name;
  double seconds_limit;
  std::function<void(std::vector<std::string>&)> body;  // appends failure notes
};

void run_criterion(const Criterion& criterion) {
  std::vector<std::string> notes;
  auto start = std::chrono::steady_clock::now();
  try {
    criterion.body(notes);
  } catch (const std::exception& error) {
    notes.push_back(std::string("exception: ") + error.what());
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > criterion.seconds_limit)
    notes.push_back("runtime " + std::to_string(elapsed) + "s exceeds " +
                    std::to_string(criterion.seconds_limit) + "s");
  if (notes.empty()) {
    std::cout << "PASS " << criterion.name << " (" << elapsed << "s)\n";
  } else {
    ++failures;
    std::cout << "FAIL " << criterion.name << " (" << elapsed << "s)\n";
    for (const std::string& note : notes) std::cout << "  - " << note << "\n";
  }
}

void expect(std::vector<std::string>& notes, bool condition, const std::string& what) {
  if (!condition) notes.push_back(what);
}

// Shared random population for criteria 4 and 5.
std::vector<Diagram> random_population() {
  static std::vector<Diagram> population = [] {
    testsupport::Rng rng(20250401);
    std::vector<Diagram> diagrams;
    for (int i = 0; i < 200; ++i) diagrams.push_back(testsupport::random_diagram(rng));
    return diagrams;
  }();
  return population;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  // 1. The seven reference diagrams classify exactly as labelled.
  criteria.push_back({"criterion-1-golden-classification", 1.0, [](auto& notes) {
    for (std::size_t i = 0; i < 7; ++i) {
      const CorpusEntry& entry = corpus()[i];
      Diagram d = load_diagram(entry.source);
      expect(notes, d.validate().empty(), entry.name + " does not validate");
      std::string label = to_string(classify(d).type);
      expect(notes, label == entry.expected_type,
             entry.name + " classified as " + label + ", expected " +
                 entry.expected_type);
    }
  }});

  // 2. Discreteness verdicts across the corpus, auxiliaries included.
  criteria.push_back({"criterion-2-discreteness-verdicts", 1.0, [](auto& notes) {
    for (const CorpusEntry& entry : corpus()) {
      Diagram d = load_diagram(entry.source);
      bool discrete = decide(d, classify(d)).is_discrete();
      expect(notes, discrete == entry.expected_discrete,
             entry.name + (discrete ? " reported discrete" : " reported non-discrete") +
                 ", expected otherwise");
    }
  }});

  // 3. Brute-force oracle cross-validation at fix radius 2, ball radius 4.
  criteria.push_back({"criterion-3-oracle-cross-validation", 60.0 * 9, [](auto& notes) {
    for (const CorpusEntry& entry : corpus()) {
      auto start = std::chrono::steady_clock::now();
      Diagram d = load_diagram(entry.source);
      ActionTypeVerdict type = classify(d);
      DiscretenessVerdict verdict = decide(d, type);
      OracleReport report = oracle_consistency(d, type, verdict, 2, 4);
      double elapsed = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start).count();
      expect(notes, report.consistent, entry.name + " inconsistent with the oracle");
      expect(notes, elapsed < 60.0,
             entry.name + " oracle took " + std::to_string(elapsed) + "s");
    }
  }});

  // 4. Attractor trichotomy property suite on 200 random diagrams.
  criteria.push_back({"criterion-4-attractor-property-suite", 120.0, [](auto& notes) {
    for (const Diagram& d : random_population()) {
      std::vector<PartialOrientation> scopos = enumerate_scopos(d);

      // Exhaustive filter over all orientation assignments per edge.
      std::vector<int> reps = d.core().edge_representatives();
      std::size_t brute_count = 0;
      std::vector<int> state(reps.size(), 0);
      for (;;) {
        PartialOrientation o;
        bool representable = true;
        for (std::size_t e = 0; e < reps.size(); ++e) {
          if (state[e] != 0 && d.core().is_non_orientable(reps[e]))
            representable = false;
          if (state[e] == 1) o.arcs.push_back(ArcRef::core(reps[e]));
          if (state[e] == 2)
            o.arcs.push_back(ArcRef::core(d.core().reverse(reps[e])));
        }
        if (representable && is_scopo(d, o)) ++brute_count;
        std::size_t idx = 0;
        while (idx < state.size() && state[idx] == 2) state[idx++] = 0;
        if (idx == state.size()) break;
        ++state[idx];
      }
      expect(notes, brute_count == scopos.size(),
             "scopo enumeration disagrees with the brute-force filter");

      for (const PartialOrientation& scopo : scopos) {
        auto [result, type] = attractor(d, scopo);
        expect(notes, type != ScopoType::C && !result.end_ray.has_value(),
               "type (c) attractor on a finite diagram");
        std::set<int> kernel;
        for (const std::string& id : result.core_vertices)
          kernel.insert(d.core().vertex_index(id));
        auto clauses = testsupport::check_attractor_clauses(d, scopo, kernel);
        expect(notes, clauses.clause_a != clauses.clause_b,
               "attractor does not satisfy exactly one clause");
        expect(notes, clauses.clause_a == (type == ScopoType::A) &&
                          clauses.clause_b == (type == ScopoType::B),
               "attractor type disagrees with the independent clause check");
        if (!notes.empty()) return;
      }
    }
  }});

  // 5. Pruning confluence under ten random deletion orders per diagram.
  criteria.push_back({"criterion-5-pruning-confluence", 120.0, [](auto& notes) {
    testsupport::Rng rng(777001);
    for (const Diagram& d : random_population()) {
      Cotree reference = minimal_cotree(d);
      std::vector<std::string> ids;
      for (int v = 0; v < static_cast<int>(d.core().vertex_count()); ++v)
        ids.push_back(d.core().vertex_id(v));
      for (int order = 0; order < 10; ++order) {
        std::shuffle(ids.begin(), ids.end(), rng);
        Cotree shuffled = minimal_cotree(d, ids);
        expect(notes,
               shuffled.vertices == reference.vertices && shuffled.rays == reference.rays,
               "minimal cotree depends on the deletion order");
        if (!notes.empty()) return;
      }
    }
  }});

  // 6. Delta-tree structure of the two-vertex diagram at radius 2.
  criteria.push_back({"criterion-6-delta-tree-structure", 1.0, [](auto& notes) {
    Diagram d = load_diagram(corpus_entry("u-s2-a3").source);
    DeltaTree tree = DeltaTree::build(d, "v0", 2);
    expect(notes, tree.size() == 7,
           "expected 7 vertices, got " + std::to_string(tree.size()));
    expect(notes, check_colouring(tree).empty(), "colouring check failed");
    expect(notes, tree.vertex(tree.root()).children.size() == 2,
           "root degree is not 2");
    for (int child : tree.vertex(tree.root()).children)
      expect(notes, tree.vertex(child).children.size() + 1 == 3,
             "depth-1 degree is not 3");
  }});

  // 7. One hundred randomised extension-lemma contracts.
  criteria.push_back({"criterion-7-extension-contract", 60.0, [](auto& notes) {
    testsupport::Rng rng(90210);
    std::vector<Diagram> diagrams;
    for (const CorpusEntry& entry : corpus())
      diagrams.push_back(load_diagram(entry.source));
    for (int trial = 0; trial < 100; ++trial) {
      const Diagram& d = diagrams[rng() % diagrams.size()];
      std::string base =
          d.core().vertex_id(static_cast<int>(rng() % d.core().vertex_count()));
      DeltaTree tree = DeltaTree::build(d, base, 3);
      LocalGroupTable table(tree.diagram());
      std::vector<int> shallow;
      for (int v = 0; v < static_cast<int>(tree.size()); ++v)
        if (tree.vertex(v).depth <= 1) shallow.push_back(v);
      int w = shallow[rng() % shallow.size()];
      const auto& elements = table.elements(tree.vertex(w).diagram_vertex);
      Permutation sigma = elements[rng() % elements.size()];

      std::optional<int> fix;
      if (rng() % 2) {
        std::vector<int> neighbours = tree.vertex(w).children;
        if (tree.vertex(w).parent >= 0) neighbours.push_back(tree.vertex(w).parent);
        const auto universe =
            tree.diagram().vertex_universe(tree.vertex(w).diagram_vertex);
        for (int candidate : neighbours) {
          const std::string& label = tree.arc_label(w, candidate);
          std::size_t index = 0;
          while (universe[index] != label) ++index;
          if (sigma(static_cast<std::uint32_t>(index)) == index) {
            fix = candidate;
            break;
          }
        }
      }

      BallAutomorphism g = extend(tree, table, w, sigma, fix);
      expect(notes, g.fixes(w), "extension moved its base vertex");
      expect(notes, local_action(g, w) == sigma,
             "extension does not realise sigma at the base");
      expect(notes, is_member(g, table), "extension violates internal respect");
      if (fix) {
        for (int v = 0; v < static_cast<int>(tree.size()); ++v) {
          if (!g.in_domain(v)) continue;
          int walk = v;
          std::vector<int> chain;
          while (walk >= 0 && walk != w) {
            chain.push_back(walk);
            walk = tree.vertex(walk).parent;
          }
          bool beyond = walk == w ? (!chain.empty() && chain.back() == *fix)
                                  : tree.vertex(w).parent == *fix;
          if (beyond)
            expect(notes, g.fixes(v), "fixed half-tree vertex moved");
        }
      }
      if (!notes.empty()) return;
    }
  }});

  // 8. Permutation kernel invariants on 500 random groups.
  criteria.push_back({"criterion-8-permutation-kernel", 30.0, [](auto& notes) {
    testsupport::Rng rng(160493);
    for (int trial = 0; trial < 500; ++trial) {
      PermGroup g = testsupport::random_group(rng);
      auto blocks = g.orbits();
      std::set<std::string> covered;
      std::size_t total = 0;
      for (const auto& block : blocks) {
        total += block.size();
        covered.insert(block.begin(), block.end());
      }
      expect(notes, total == g.degree() && covered.size() == g.degree(),
             "orbits do not partition the universe");

      std::vector<Permutation> elements;
      try {
        elements = g.enumerate();
      } catch (const CapExceededError&) {
        continue;
      }
      for (const auto& element : elements)
        for (const auto& block : blocks) {
          std::set<std::string> in(block.begin(), block.end());
          for (const std::string& point : block)
            expect(notes, in.count(g.universe()[element(g.index_of(point))]) == 1,
                   "an element does not fix an orbit setwise");
        }
      expect(notes, g.pointwise_stabiliser(g.find_base()).is_trivial(),
             "the greedy base has a non-trivial stabiliser");
      if (g.is_semiregular())
        for (const auto& block : blocks)
          expect(notes, block.size() == elements.size(),
                 "semiregular group with orbit size != group order");
      expect(notes, g.enumerate() == elements, "enumeration is not deterministic");
      if (!notes.empty()) return;
    }
  }});

  for (const Criterion& criterion : criteria) run_criterion(criterion);
  if (failures == 0) {
    std::cout << "All " << criteria.size() << " acceptance criteria passed.\n";
    return 0;
  }
  std::cout << failures << " acceptance criteria failed.\n";
  return 1;
}
