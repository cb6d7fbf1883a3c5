#include "lad/lad_io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "lad/errors.hpp"

namespace lad {

namespace {

struct ArcRecord {
  int line;
  std::string id, from, to, reverse;
  ColourSet colours;
  bool self_reverse_loop = false;
};

struct ActionRecord {
  int line;
  std::string vertex;
  bool symbolic = false;
  std::string gens_text;
  SymbolicAction sym;
};

struct SegmentRecord {
  int line;
  std::string gens_text;  // "trivial" lowered to empty generator list
  bool trivial_keyword = false;
  std::vector<std::string> out_colours, in_colours;
};

struct RayRecord {
  int line;
  std::string id, at;
  int period = 0;
  std::vector<SegmentRecord> segments;
};

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    if (token[0] == '#') break;
    tokens.push_back(token);
  }
  return tokens;
}

bool reserved_word(const std::string& name) {
  return name == "out" || name == "in" || name == "infinite" || name == "trivial";
}

void check_name(int line, const std::string& kind, const std::string& name) {
  if (name.empty()) throw LadParseError(line, kind + " name is empty");
  if (reserved_word(name))
    throw LadParseError(line, kind + " name '" + name + "' is a reserved word");
  for (char c : name)
    if (c == '(' || c == ')' || c == ';' || c == ':' || c == '#')
      throw LadParseError(line, kind + " name '" + name + "' contains '" +
                                     std::string(1, c) + "'");
}

bool parse_bool(int line, const std::string& text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw LadParseError(line, "expected true or false, got '" + text + "'");
}

std::string join(const std::vector<std::string>& tokens, std::size_t first,
                 std::size_t last) {
  std::string out;
  for (std::size_t i = first; i < last; ++i) {
    if (!out.empty()) out += ' ';
    out += tokens[i];
  }
  return out;
}

std::string trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

// Parses a ';'-separated generator list over the universe. An entirely empty
// text denotes the empty generator list; an empty part denotes the identity.
std::vector<Permutation> parse_generators(int line, const std::string& text,
                                          const std::vector<std::string>& universe) {
  std::vector<Permutation> generators;
  if (trim(text).empty()) return generators;
  std::size_t start = 0;
  for (;;) {
    std::size_t semi = text.find(';', start);
    std::string part = trim(semi == std::string::npos ? text.substr(start)
                                                      : text.substr(start, semi - start));
    try {
      generators.push_back(parse_cycles(part, universe));
    } catch (const std::invalid_argument& error) {
      throw LadParseError(line, error.what());
    }
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return generators;
}

LocalAction build_explicit_action(int line, const std::string& gens_text,
                                  std::vector<std::string> universe,
                                  Diagram& diagram, const std::string& where) {
  LocalAction action;
  std::set<std::string> names(universe.begin(), universe.end());
  if (names.size() != universe.size()) {
    // Ambiguous universe; leave the generators unparsed and let validation
    // report the duplicate colours.
    action.unparsed = gens_text;
    diagram.record_assembly_violation(
        where + ": duplicate colours make the action universe ambiguous");
    return action;
  }
  action.explicit_group =
      PermGroup(universe, parse_generators(line, gens_text, universe));
  return action;
}

}  // namespace

Diagram load_diagram(const std::string& text) {
  std::vector<std::string> vertex_ids;
  std::vector<int> vertex_lines;
  std::vector<ArcRecord> arcs;
  std::vector<ActionRecord> actions;
  std::vector<RayRecord> rays;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  RayRecord* open_ray = nullptr;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& keyword = tokens[0];

    if (keyword != "segment" && open_ray &&
        static_cast<int>(open_ray->segments.size()) < open_ray->period)
      throw LadParseError(line_no, "ray " + open_ray->id + " declares period " +
                                       std::to_string(open_ray->period) + " but only " +
                                       std::to_string(open_ray->segments.size()) +
                                       " segments");

    if (keyword == "vertex") {
      if (tokens.size() != 2) throw LadParseError(line_no, "expected: vertex <id>");
      check_name(line_no, "vertex", tokens[1]);
      vertex_ids.push_back(tokens[1]);
      vertex_lines.push_back(line_no);
    } else if (keyword == "arc") {
      if (tokens.size() < 9 || tokens[2] != "from" || tokens[4] != "to" ||
          tokens[6] != "reverse" || tokens[8] != "colours")
        throw LadParseError(line_no,
                            "expected: arc <id> from <v> to <w> reverse <id'> "
                            "colours ...");
      ArcRecord arc;
      arc.line = line_no;
      arc.id = tokens[1];
      arc.from = tokens[3];
      arc.to = tokens[5];
      arc.reverse = tokens[7];
      check_name(line_no, "arc", arc.id);
      if (tokens.size() >= 10 && tokens[9] == "infinite") {
        if (tokens.size() != 11)
          throw LadParseError(line_no, "expected: colours infinite <name>");
        check_name(line_no, "colour set", tokens[10]);
        arc.colours = ColourSet::infinite_named(tokens[10]);
      } else {
        std::vector<std::string> names(tokens.begin() + 9, tokens.end());
        for (const std::string& name : names) check_name(line_no, "colour", name);
        arc.colours = ColourSet::finite(std::move(names));
      }
      arcs.push_back(std::move(arc));
    } else if (keyword == "loop") {
      if (tokens.size() < 6 || tokens[2] != "at" || tokens[4] != "self-reverse" ||
          tokens[5] != "colours")
        throw LadParseError(line_no,
                            "expected: loop <id> at <v> self-reverse colours ...");
      ArcRecord arc;
      arc.line = line_no;
      arc.id = tokens[1];
      arc.from = tokens[3];
      arc.to = tokens[3];
      arc.reverse = tokens[1];
      arc.self_reverse_loop = true;
      check_name(line_no, "arc", arc.id);
      std::vector<std::string> names(tokens.begin() + 6, tokens.end());
      for (const std::string& name : names) check_name(line_no, "colour", name);
      arc.colours = ColourSet::finite(std::move(names));
      arcs.push_back(std::move(arc));
    } else if (keyword == "action") {
      if (tokens.size() < 3)
        throw LadParseError(line_no, "expected: action <v> gens|symbolic ...");
      ActionRecord action;
      action.line = line_no;
      action.vertex = tokens[1];
      if (tokens[2] == "gens") {
        action.gens_text = join(tokens, 3, tokens.size());
      } else if (tokens[2] == "symbolic") {
        action.symbolic = true;
        std::size_t i = 3;
        for (const char* key : {"trivial=", "semiregular=", "finite_base="}) {
          if (i >= tokens.size() || tokens[i].rfind(key, 0) != 0)
            throw LadParseError(line_no, std::string("expected ") + key + "<bool>");
          bool value = parse_bool(line_no, tokens[i].substr(std::string(key).size()));
          if (i == 3) action.sym.trivial = value;
          if (i == 4) action.sym.semiregular = value;
          if (i == 5) action.sym.finite_base = value;
          ++i;
        }
        if (i >= tokens.size() || tokens[i] != "orbits")
          throw LadParseError(line_no, "expected orbits <arc>:<size> ...");
        for (++i; i < tokens.size(); ++i) {
          std::size_t colon = tokens[i].find(':');
          if (colon == std::string::npos || colon == 0 || colon + 1 >= tokens[i].size())
            throw LadParseError(line_no, "expected <arc>:<size|inf>, got '" +
                                             tokens[i] + "'");
          action.sym.orbits.emplace_back(tokens[i].substr(0, colon),
                                         tokens[i].substr(colon + 1));
        }
      } else {
        throw LadParseError(line_no, "expected gens or symbolic after action <v>");
      }
      actions.push_back(std::move(action));
    } else if (keyword == "ray") {
      if (tokens.size() != 6 || tokens[2] != "at" || tokens[4] != "period")
        throw LadParseError(line_no, "expected: ray <id> at <v> period <p>");
      RayRecord ray;
      ray.line = line_no;
      ray.id = tokens[1];
      ray.at = tokens[3];
      check_name(line_no, "ray", ray.id);
      try {
        ray.period = std::stoi(tokens[5]);
      } catch (...) {
        throw LadParseError(line_no, "period is not a number: " + tokens[5]);
      }
      if (ray.period < 1) throw LadParseError(line_no, "period must be at least 1");
      rays.push_back(std::move(ray));
      open_ray = &rays.back();
    } else if (keyword == "segment") {
      if (!open_ray) throw LadParseError(line_no, "segment outside a ray block");
      if (static_cast<int>(open_ray->segments.size()) >= open_ray->period)
        throw LadParseError(line_no, "more segments than the declared period");
      if (tokens.size() < 3 || tokens[2] != "action")
        throw LadParseError(line_no,
                            "expected: segment <k> action <gens|trivial> out ... in ...");
      int index = -1;
      try {
        index = std::stoi(tokens[1]);
      } catch (...) {
        throw LadParseError(line_no, "segment index is not a number");
      }
      if (index != static_cast<int>(open_ray->segments.size()))
        throw LadParseError(line_no, "segments must appear in order 0, 1, ...");
      std::size_t out_pos = 0, in_pos = 0;
      for (std::size_t i = 3; i < tokens.size(); ++i) {
        if (tokens[i] == "out" && out_pos == 0) out_pos = i;
        if (tokens[i] == "in" && out_pos != 0) {
          in_pos = i;
          break;
        }
      }
      if (out_pos == 0 || in_pos == 0)
        throw LadParseError(line_no, "segment needs 'out <colours> in <colours>'");
      SegmentRecord segment;
      segment.line = line_no;
      std::string gens = join(tokens, 3, out_pos);
      if (gens == "trivial") {
        segment.trivial_keyword = true;
      } else {
        segment.gens_text = gens;
      }
      segment.out_colours.assign(tokens.begin() + out_pos + 1, tokens.begin() + in_pos);
      segment.in_colours.assign(tokens.begin() + in_pos + 1, tokens.end());
      for (const std::string& name : segment.out_colours)
        check_name(line_no, "colour", name);
      for (const std::string& name : segment.in_colours)
        check_name(line_no, "colour", name);
      open_ray->segments.push_back(std::move(segment));
    } else {
      throw LadParseError(line_no, "unknown keyword: " + keyword);
    }
  }
  if (open_ray && static_cast<int>(open_ray->segments.size()) < open_ray->period)
    throw LadParseError(line_no, "ray " + open_ray->id + " is missing segments");

  // Assembly. Unresolvable references are parse errors; structural breakage
  // is left to validation.
  Diagram diagram;
  for (std::size_t i = 0; i < vertex_ids.size(); ++i) {
    try {
      diagram.add_vertex(vertex_ids[i]);
    } catch (const Error& error) {
      throw LadParseError(vertex_lines[i], error.what());
    }
  }
  std::set<std::string> arc_ids;
  for (const ArcRecord& arc : arcs)
    if (!arc_ids.insert(arc.id).second)
      throw LadParseError(arc.line, "duplicate arc id: " + arc.id);
  for (const ArcRecord& arc : arcs) {
    if (!diagram.core().has_vertex(arc.from))
      throw LadParseError(arc.line, "undeclared vertex: " + arc.from);
    if (!diagram.core().has_vertex(arc.to))
      throw LadParseError(arc.line, "undeclared vertex: " + arc.to);
    if (!arc.self_reverse_loop && !arc_ids.count(arc.reverse))
      throw LadParseError(arc.line, "reverse of undeclared arc: " + arc.reverse);
    if (arc.self_reverse_loop)
      diagram.add_self_reverse_loop(arc.id, arc.from, arc.colours);
    else
      diagram.add_arc(arc.id, arc.from, arc.to, arc.reverse, arc.colours);
  }
  // Reverse declarations must be symmetric.
  for (const ArcRecord& arc : arcs) {
    if (arc.self_reverse_loop) continue;
    for (const ArcRecord& other : arcs)
      if (other.id == arc.reverse && other.reverse != arc.id)
        throw LadParseError(arc.line, "asymmetric reverse declaration: " + arc.id +
                                          " <-> " + other.id);
  }

  std::vector<RayGadget> gadgets;
  for (const RayRecord& record : rays) {
    if (!diagram.core().has_vertex(record.at))
      throw LadParseError(record.line, "undeclared vertex: " + record.at);
    RayGadget gadget;
    gadget.id = record.id;
    gadget.attachment = record.at;
    gadget.period = record.period;
    gadget.segments.resize(record.segments.size());
    for (std::size_t s = 0; s < record.segments.size(); ++s) {
      gadget.segments[s].out_colours = record.segments[s].out_colours;
      gadget.segments[s].in_colours = record.segments[s].in_colours;
    }
    gadgets.push_back(std::move(gadget));
  }

  // Segment actions act on in_k together with the next segment's out set.
  for (std::size_t r = 0; r < gadgets.size(); ++r) {
    for (std::size_t s = 0; s < gadgets[r].segments.size(); ++s) {
      const SegmentRecord& record = rays[r].segments[s];
      std::size_t next = (s + 1) % gadgets[r].segments.size();
      std::vector<std::string> universe = gadgets[r].segments[s].in_colours;
      universe.insert(universe.end(), gadgets[r].segments[next].out_colours.begin(),
                      gadgets[r].segments[next].out_colours.end());
      std::string text = record.trivial_keyword ? "" : record.gens_text;
      gadgets[r].segments[s].action = build_explicit_action(
          record.line, text, std::move(universe), diagram,
          "ray " + gadgets[r].id + " segment " + std::to_string(s));
    }
    diagram.add_ray(std::move(gadgets[r]));
  }

  std::set<std::string> action_vertices;
  for (const ActionRecord& record : actions) {
    if (!diagram.core().has_vertex(record.vertex))
      throw LadParseError(record.line, "undeclared vertex: " + record.vertex);
    if (!action_vertices.insert(record.vertex).second)
      throw LadParseError(record.line, "action redeclared for " + record.vertex);
    if (record.symbolic) {
      LocalAction action;
      action.symbolic = record.sym;
      diagram.set_action(record.vertex, std::move(action));
      continue;
    }
    int v = diagram.core().vertex_index(record.vertex);
    diagram.set_action(record.vertex,
                       build_explicit_action(record.line, record.gens_text,
                                             diagram.vertex_universe(v), diagram,
                                             "vertex " + record.vertex));
  }

  diagram.finalize();
  return diagram;
}

namespace {

std::string format_generators(const PermGroup& group) {
  std::string out;
  for (std::size_t i = 0; i < group.generators().size(); ++i) {
    if (i > 0) out += "; ";
    out += format_cycles(group.generators()[i], group.universe());
  }
  return out;
}

}  // namespace

std::string save_diagram(const Diagram& diagram) {
  std::ostringstream out;
  const SerreGraph& core = diagram.core();
  for (int v = 0; v < static_cast<int>(core.vertex_count()); ++v)
    out << "vertex " << core.vertex_id(v) << "\n";
  for (int a = 0; a < static_cast<int>(core.arc_count()); ++a) {
    const ColourSet& colours = diagram.colour_set(a);
    if (core.is_non_orientable(a)) {
      out << "loop " << core.arc_id(a) << " at " << core.vertex_id(core.origin(a))
          << " self-reverse colours";
      for (const std::string& c : colours.colours) out << ' ' << c;
      out << "\n";
    } else {
      out << "arc " << core.arc_id(a) << " from " << core.vertex_id(core.origin(a))
          << " to " << core.vertex_id(core.terminus(a)) << " reverse "
          << core.arc_id(core.reverse(a)) << " colours";
      if (colours.infinite)
        out << " infinite " << colours.symbolic_name;
      else
        for (const std::string& c : colours.colours) out << ' ' << c;
      out << "\n";
    }
  }
  for (int v = 0; v < static_cast<int>(core.vertex_count()); ++v) {
    if (!diagram.has_action(v)) continue;
    const LocalAction& action = diagram.action(v);
    out << "action " << core.vertex_id(v);
    if (action.is_symbolic()) {
      const SymbolicAction& sym = *action.symbolic;
      out << " symbolic trivial=" << (sym.trivial ? "true" : "false")
          << " semiregular=" << (sym.semiregular ? "true" : "false")
          << " finite_base=" << (sym.finite_base ? "true" : "false") << " orbits";
      for (const auto& [name, size] : sym.orbits) out << ' ' << name << ':' << size;
    } else if (action.unparsed) {
      out << " gens " << *action.unparsed;
    } else {
      std::string gens = format_generators(*action.explicit_group);
      out << " gens";
      if (!gens.empty()) out << ' ' << gens;
    }
    out << "\n";
  }
  for (const RayGadget& ray : diagram.rays()) {
    out << "ray " << ray.id << " at " << ray.attachment << " period " << ray.period
        << "\n";
    for (std::size_t s = 0; s < ray.segments.size(); ++s) {
      const RaySegment& segment = ray.segments[s];
      out << "segment " << s << " action ";
      if (segment.action.unparsed) {
        out << *segment.action.unparsed;
      } else {
        std::string gens = format_generators(*segment.action.explicit_group);
        out << (gens.empty() ? "trivial" : gens);
      }
      out << " out";
      for (const std::string& c : segment.out_colours) out << ' ' << c;
      out << " in";
      for (const std::string& c : segment.in_colours) out << ' ' << c;
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace lad
