#include "lad/sgraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace lad {

int SerreGraph::add_vertex(const std::string& id) {
  for (const std::string& existing : vertex_ids_)
    if (existing == id) throw Error("duplicate vertex id: " + id);
  vertex_ids_.push_back(id);
  out_arcs_.emplace_back();
  return static_cast<int>(vertex_ids_.size()) - 1;
}

int SerreGraph::add_arc(const std::string& id, const std::string& from,
                        const std::string& to, const std::string& reverse_id) {
  for (const std::string& existing : arc_ids_)
    if (existing == id) throw Error("duplicate arc id: " + id);
  int u = vertex_index(from);
  int v = vertex_index(to);
  arc_ids_.push_back(id);
  origin_.push_back(u);
  terminus_.push_back(v);
  reverse_.push_back(-1);
  reverse_names_.push_back(reverse_id);
  int a = static_cast<int>(arc_ids_.size()) - 1;
  out_arcs_[u].push_back(a);
  return a;
}

int SerreGraph::add_self_reverse_loop(const std::string& id, const std::string& at) {
  int a = add_arc(id, at, at, id);
  reverse_[a] = a;
  return a;
}

void SerreGraph::link_reverses() {
  for (std::size_t a = 0; a < arc_ids_.size(); ++a) {
    if (reverse_[a] >= 0) continue;
    reverse_[a] = arc_index(reverse_names_[a]);
  }
}

int SerreGraph::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertex_ids_.size(); ++i)
    if (vertex_ids_[i] == id) return static_cast<int>(i);
  throw UnknownVertexError("unknown vertex: " + id);
}

bool SerreGraph::has_vertex(const std::string& id) const {
  for (const std::string& existing : vertex_ids_)
    if (existing == id) return true;
  return false;
}

int SerreGraph::arc_index(const std::string& id) const {
  for (std::size_t i = 0; i < arc_ids_.size(); ++i)
    if (arc_ids_[i] == id) return static_cast<int>(i);
  throw Error("unknown arc: " + id);
}

std::size_t SerreGraph::edge_count() const {
  std::size_t non_orientable = 0;
  for (std::size_t a = 0; a < arc_ids_.size(); ++a)
    if (reverse_[a] == static_cast<int>(a)) ++non_orientable;
  return non_orientable + (arc_ids_.size() - non_orientable) / 2;
}

std::vector<int> SerreGraph::edge_representatives() const {
  std::vector<int> reps;
  for (int a = 0; a < static_cast<int>(arc_ids_.size()); ++a)
    if (a <= reverse_[a]) reps.push_back(a);
  return reps;
}

std::vector<std::string> SerreGraph::validate() const {
  std::vector<std::string> violations;
  for (int a = 0; a < static_cast<int>(arc_ids_.size()); ++a) {
    if (reverse_[a] < 0) {
      violations.push_back("arc " + arc_ids_[a] + ": reverse not linked");
      continue;
    }
    int r = reverse_[a];
    if (reverse_[r] != a)
      violations.push_back("arc " + arc_ids_[a] + ": reversal is not involutive");
    if (origin_[r] != terminus_[a])
      violations.push_back("arc " + arc_ids_[a] +
                           ": origin of reverse differs from terminus");
  }
  if (!vertex_ids_.empty() && !is_connected())
    violations.push_back("graph is not connected");
  if (vertex_ids_.empty()) violations.push_back("graph has no vertices");
  return violations;
}

bool SerreGraph::is_connected() const {
  if (vertex_ids_.empty()) return false;
  std::vector<int> dist = distances_from(0);
  for (int d : dist)
    if (d < 0) return false;
  return true;
}

std::vector<int> SerreGraph::distances_from(int v) const {
  std::vector<int> dist(vertex_ids_.size(), -1);
  std::queue<int> queue;
  dist[v] = 0;
  queue.push(v);
  while (!queue.empty()) {
    int current = queue.front();
    queue.pop();
    for (int a : out_arcs_[current]) {
      int next = terminus_[a];
      if (dist[next] < 0) {
        dist[next] = dist[current] + 1;
        queue.push(next);
      }
    }
  }
  return dist;
}

bool SerreGraph::is_tree() const {
  if (vertex_ids_.empty() || !is_connected()) return false;
  for (int a = 0; a < static_cast<int>(arc_ids_.size()); ++a)
    if (is_loop(a)) return false;
  // Parallel edges between a vertex pair form a 2-cycle.
  std::set<std::pair<int, int>> seen;
  for (int a : edge_representatives()) {
    auto key = std::minmax(origin_[a], terminus_[a]);
    if (!seen.insert(key).second) return false;
  }
  return edge_count() == vertex_ids_.size() - 1;
}

std::optional<int> SerreGraph::cycle_graph_order() const {
  if (vertex_ids_.empty() || !is_connected()) return std::nullopt;
  for (int a = 0; a < static_cast<int>(arc_ids_.size()); ++a)
    if (is_non_orientable(a)) return std::nullopt;
  for (std::size_t v = 0; v < vertex_ids_.size(); ++v)
    if (out_arcs_[v].size() != 2) return std::nullopt;
  // Degenerate shapes, handled explicitly: a single vertex whose two arcs are
  // an orientable loop pair, and two vertices joined by two distinct edges.
  if (vertex_ids_.size() == 1) {
    if (arc_ids_.size() == 2 && is_loop(0) && reverse_[0] == 1) return 1;
    return std::nullopt;
  }
  if (vertex_ids_.size() == 2) {
    if (arc_ids_.size() != 4) return std::nullopt;
    for (int a = 0; a < 4; ++a)
      if (is_loop(a)) return std::nullopt;
    return 2;
  }
  for (int a = 0; a < static_cast<int>(arc_ids_.size()); ++a)
    if (is_loop(a)) return std::nullopt;
  return static_cast<int>(vertex_ids_.size());
}

std::pair<std::vector<int>, std::vector<int>> SerreGraph::cyclic_orientations() const {
  std::optional<int> order = cycle_graph_order();
  if (!order) throw NotACycleGraphError("not a cycle graph");
  // Start at the first declared arc and follow the cycle: the next arc is the
  // one leaving t(a) other than r(a).
  std::vector<int> forward;
  int start = 0;
  int current = start;
  do {
    forward.push_back(current);
    int v = terminus_[current];
    int next = -1;
    for (int candidate : out_arcs_[v])
      if (candidate != reverse_[current]) next = candidate;
    current = next;
  } while (current != start);
  std::vector<int> backward;
  for (int a : forward) backward.push_back(reverse_[a]);
  std::sort(forward.begin(), forward.end());
  std::sort(backward.begin(), backward.end());
  return {forward, backward};
}

std::vector<int> SerreGraph::half_tree(int a) const {
  if (!is_tree()) throw NotATreeError("half-trees are defined on trees only");
  std::vector<int> to_head = distances_from(terminus_[a]);
  std::vector<int> to_tail = distances_from(origin_[a]);
  std::vector<int> result;
  for (std::size_t v = 0; v < vertex_ids_.size(); ++v)
    if (to_head[v] < to_tail[v]) result.push_back(static_cast<int>(v));
  return result;
}

SerreGraph SerreGraph::induced(const std::vector<int>& vertices,
                               std::vector<int>* arc_map) const {
  SerreGraph sub;
  std::set<int> keep(vertices.begin(), vertices.end());
  for (std::size_t v = 0; v < vertex_ids_.size(); ++v)
    if (keep.count(static_cast<int>(v))) sub.add_vertex(vertex_ids_[v]);
  if (arc_map) arc_map->clear();
  for (int a = 0; a < static_cast<int>(arc_ids_.size()); ++a) {
    if (!keep.count(origin_[a]) || !keep.count(terminus_[a])) continue;
    if (is_non_orientable(a))
      sub.add_self_reverse_loop(arc_ids_[a], vertex_ids_[origin_[a]]);
    else
      sub.add_arc(arc_ids_[a], vertex_ids_[origin_[a]], vertex_ids_[terminus_[a]],
                  arc_ids_[reverse_[a]]);
    if (arc_map) arc_map->push_back(a);
  }
  sub.link_reverses();
  return sub;
}

std::string SerreGraph::to_dot(const std::string& name) const {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  for (const std::string& id : vertex_ids_) out << "  \"" << id << "\";\n";
  for (int a : edge_representatives()) {
    if (is_non_orientable(a)) {
      out << "  \"" << vertex_ids_[origin_[a]] << "\" -> \""
          << vertex_ids_[terminus_[a]] << "\" [label=\"" << arc_ids_[a]
          << " (self-reverse)\"];\n";
    } else {
      out << "  \"" << vertex_ids_[origin_[a]] << "\" -> \""
          << vertex_ids_[terminus_[a]] << "\" [label=\"" << arc_ids_[a] << " / "
          << arc_ids_[reverse_[a]] << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace lad
