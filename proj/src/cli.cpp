#include "lad/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "lad/corpus.hpp"
#include "lad/discrete.hpp"
#include "lad/dtree.hpp"
#include "lad/lad_io.hpp"
#include "lad/scopo.hpp"
#include "lad/ugroup.hpp"

namespace lad {

namespace {

constexpr int kOk = 0;
constexpr int kInconsistent = 1;
constexpr int kInvalid = 2;
constexpr int kParseError = 3;
constexpr int kRefused = 4;

struct Refusal {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LadParseError(0, "cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Diagram load_file(const std::string& path) { return load_diagram(read_file(path)); }

// Loads and validates; prints violations and throws Refusal-like sentinel via
// return flag instead. Returns false when invalid.
bool load_valid(const std::string& path, Diagram& diagram, std::ostream& err) {
  diagram = load_file(path);
  std::vector<std::string> violations = diagram.validate();
  if (violations.empty()) return true;
  for (const std::string& violation : violations)
    err << "violation=" << violation << "\n";
  return false;
}

std::string discrete_record(const Diagram& diagram, const ActionTypeVerdict& type,
                            const DiscretenessVerdict& verdict) {
  std::ostringstream out;
  out << "discrete=" << (verdict.is_discrete() ? "yes" : "no")
      << " clause=" << verdict.clause;
  if (verdict.is_discrete()) {
    DiscreteWitness witness = discreteness_witness(diagram, type, verdict);
    out << " witness=" << witness.description << ":" << witness.base_vertex << ":"
        << witness.paths_text();
  } else {
    out << " witness=" << verdict.detail;
  }
  return out.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"local action diagram toolkit"};
  app.require_subcommand(1);

  std::string path, base, name;
  int radius = 2;
  int fix_radius = 1;
  int ball_radius = 4;
  std::size_t edge_cap = 16;
  bool dot = true;

  auto* cmd_validate = app.add_subcommand("validate", "check a .lad file");
  cmd_validate->add_option("path", path)->required();

  auto* cmd_classify = app.add_subcommand("classify", "action type of a diagram");
  cmd_classify->add_option("path", path)->required();

  auto* cmd_discrete = app.add_subcommand("discrete", "discreteness verdict");
  cmd_discrete->add_option("path", path)->required();

  auto* cmd_tree = app.add_subcommand("tree", "emit a truncated Delta-tree");
  cmd_tree->add_option("path", path)->required();
  cmd_tree->add_option("--base", base, "base vertex (default: first vertex)");
  cmd_tree->add_option("--radius", radius, "tree radius")->required();
  cmd_tree->add_flag("--dot", dot, "emit DOT (default)");

  auto* cmd_oracle = app.add_subcommand("oracle", "brute-force cross-validation");
  cmd_oracle->add_option("path", path)->required();
  cmd_oracle->add_option("--fix-radius", fix_radius)->required();
  cmd_oracle->add_option("--ball-radius", ball_radius)->required();

  auto* cmd_scopos = app.add_subcommand("scopos", "enumerate scopos with attractors");
  cmd_scopos->add_option("path", path)->required();
  cmd_scopos->add_option("--cap", edge_cap, "edge cap for enumeration");

  auto* cmd_examples = app.add_subcommand("examples", "builtin corpus");
  auto* cmd_examples_list = cmd_examples->add_subcommand("list", "list entries");
  auto* cmd_examples_emit = cmd_examples->add_subcommand("emit", "print an entry");
  cmd_examples_emit->add_option("name", name)->required();
  cmd_examples->require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("ladtool");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help, out, err) == 0 ? kOk : kRefused;
  } catch (const CLI::ParseError& error) {
    app.exit(error, out, err);
    return kRefused;
  }

  try {
    if (*cmd_validate) {
      Diagram diagram;
      try {
        diagram = load_file(path);
      } catch (const LadParseError& error) {
        err << "parse-error=" << error.what() << "\n";
        return kParseError;
      }
      std::vector<std::string> violations = diagram.validate();
      if (violations.empty()) {
        out << "valid=yes\n";
        return kOk;
      }
      out << "valid=no\n";
      for (const std::string& violation : violations)
        out << "violation=" << violation << "\n";
      return kInvalid;
    }

    if (*cmd_examples_list) {
      for (const CorpusEntry& entry : corpus()) out << entry.name << "\n";
      return kOk;
    }
    if (*cmd_examples_emit) {
      for (const CorpusEntry& entry : corpus())
        if (entry.name == name) {
          out << entry.source;
          return kOk;
        }
      err << "unknown corpus entry: " << name << "\n";
      return kRefused;
    }

    Diagram diagram;
    if (!load_valid(path, diagram, err)) return kInvalid;

    if (*cmd_classify) {
      ActionTypeVerdict verdict = classify(diagram);
      out << "type=" << to_string(verdict.type) << " " << verdict.witness_text()
          << "\n";
      return kOk;
    }

    if (*cmd_discrete) {
      ActionTypeVerdict type = classify(diagram);
      DiscretenessVerdict verdict = decide(diagram, type);
      out << discrete_record(diagram, type, verdict) << "\n";
      return kOk;
    }

    if (*cmd_tree) {
      std::string root = base.empty() ? diagram.core().vertex_id(0) : base;
      DeltaTree tree = DeltaTree::build(diagram, root, radius);
      out << tree.to_dot();
      return kOk;
    }

    if (*cmd_oracle) {
      ActionTypeVerdict type = classify(diagram);
      DiscretenessVerdict verdict = decide(diagram, type);
      OracleReport report = oracle_consistency(diagram, type, verdict, fix_radius,
                                               ball_radius);
      out << (report.consistent ? "Consistent" : "Inconsistent") << "\n";
      for (const std::string& line : report.lines) out << "detail=" << line << "\n";
      return report.consistent ? kOk : kInconsistent;
    }

    if (*cmd_scopos) {
      std::vector<PartialOrientation> scopos = enumerate_scopos(diagram, edge_cap);
      for (const PartialOrientation& scopo : scopos) {
        auto [attracted, type] = attractor(diagram, scopo);
        out << "scopo={";
        for (std::size_t i = 0; i < scopo.arcs.size(); ++i) {
          if (i > 0) out << ",";
          out << diagram.ref_name(scopo.arcs[i]);
        }
        out << "} attractor=";
        if (attracted.end_ray) {
          out << "end:" << *attracted.end_ray;
        } else {
          out << "{";
          for (std::size_t i = 0; i < attracted.core_vertices.size(); ++i) {
            if (i > 0) out << ",";
            out << attracted.core_vertices[i];
          }
          out << "}";
        }
        out << " type=" << (type == ScopoType::A ? "a" : type == ScopoType::B ? "b" : "c")
            << "\n";
      }
      out << "count=" << scopos.size() << "\n";
      return kOk;
    }
  } catch (const LadParseError& error) {
    err << "parse-error=" << error.what() << "\n";
    return kParseError;
  } catch (const UnbuildableRadiusError& error) {
    err << "refused=" << error.what() << "\n";
    return kRefused;
  } catch (const std::invalid_argument& error) {
    err << "usage-error=" << error.what() << "\n";
    return kRefused;
  } catch (const CapExceededError& error) {
    err << "refused=" << error.what() << "\n";
    return kRefused;
  } catch (const Error& error) {
    err << "refused=" << error.what() << "\n";
    return kRefused;
  }
  return kOk;
}

}  // namespace lad
