#include "lad/perm.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lad {

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::uint32_t img : images) {
    if (img >= images.size() || seen[img])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[img] = true;
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& other) const {
  if (degree() != other.degree())
    throw std::invalid_argument("degree mismatch in composition");
  std::vector<std::uint32_t> images(degree());
  for (std::size_t i = 0; i < degree(); ++i)
    images[i] = other.images_[images_[i]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> images(degree());
  for (std::size_t i = 0; i < degree(); ++i)
    images[images_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(images));
}

PermGroup::PermGroup(std::vector<std::string> universe,
                     std::vector<Permutation> generators)
    : universe_(std::move(universe)), generators_(std::move(generators)) {
  std::set<std::string> names(universe_.begin(), universe_.end());
  if (names.size() != universe_.size())
    throw std::invalid_argument("universe contains duplicate points");
  for (const Permutation& g : generators_)
    if (g.degree() != universe_.size())
      throw std::invalid_argument("generator degree does not match universe");
}

PermGroup PermGroup::trivial(std::vector<std::string> universe) {
  return PermGroup(std::move(universe), {});
}

std::uint32_t PermGroup::index_of(const std::string& point) const {
  for (std::size_t i = 0; i < universe_.size(); ++i)
    if (universe_[i] == point) return static_cast<std::uint32_t>(i);
  throw UnknownPointError("unknown point: " + point);
}

std::vector<std::string> PermGroup::orbit(const std::string& point) const {
  std::uint32_t start = index_of(point);
  std::vector<std::uint32_t> queue{start};
  std::vector<bool> seen(universe_.size(), false);
  seen[start] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t current = queue[head];
    for (const Permutation& g : generators_) {
      std::uint32_t image = g(current);
      if (!seen[image]) {
        seen[image] = true;
        queue.push_back(image);
      }
    }
  }
  std::vector<std::string> result;
  result.reserve(queue.size());
  for (std::uint32_t i : queue) result.push_back(universe_[i]);
  return result;
}

std::vector<std::vector<std::string>> PermGroup::orbits() const {
  std::vector<std::vector<std::string>> blocks;
  std::set<std::string> assigned;
  for (const std::string& point : universe_) {
    if (assigned.count(point)) continue;
    std::vector<std::string> block = orbit(point);
    assigned.insert(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::vector<Permutation> PermGroup::enumerate(std::size_t cap) const {
  if (cap < 1) throw std::invalid_argument("enumeration cap must be positive");
  std::vector<Permutation> elements{Permutation::identity(degree())};
  std::set<std::vector<std::uint32_t>> seen{elements[0].images()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    // elements grows while we iterate; index-based BFS keeps word order.
    for (const Permutation& g : generators_) {
      Permutation next = elements[head].then(g);
      if (seen.insert(next.images()).second) {
        if (elements.size() >= cap)
          throw CapExceededError("group enumeration exceeds cap", elements.size());
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

bool PermGroup::is_trivial() const {
  for (const Permutation& g : generators_)
    if (!g.is_identity()) return false;
  return true;
}

bool PermGroup::is_semiregular(std::size_t cap) const {
  for (const Permutation& g : enumerate(cap)) {
    if (g.is_identity()) continue;
    for (std::uint32_t i = 0; i < degree(); ++i)
      if (g(i) == i) return false;
  }
  return true;
}

bool PermGroup::contains(const Permutation& g, std::size_t cap) const {
  if (g.degree() != degree()) return false;
  for (const Permutation& element : enumerate(cap))
    if (element == g) return true;
  return false;
}

PermGroup PermGroup::pointwise_stabiliser(const std::vector<std::string>& points,
                                          std::size_t cap) const {
  std::vector<std::uint32_t> fixed;
  fixed.reserve(points.size());
  for (const std::string& point : points) fixed.push_back(index_of(point));
  std::vector<Permutation> stabilising;
  for (const Permutation& g : enumerate(cap)) {
    bool fixes_all = true;
    for (std::uint32_t i : fixed)
      if (g(i) != i) {
        fixes_all = false;
        break;
      }
    if (fixes_all && !g.is_identity()) stabilising.push_back(g);
  }
  return PermGroup(universe_, std::move(stabilising));
}

std::vector<std::string> PermGroup::find_base(std::size_t cap) const {
  std::vector<std::string> base;
  PermGroup current = *this;
  for (;;) {
    std::int64_t moved = -1;
    for (std::size_t i = 0; i < universe_.size() && moved < 0; ++i)
      for (const Permutation& g : current.generators_)
        if (g(static_cast<std::uint32_t>(i)) != i) {
          moved = static_cast<std::int64_t>(i);
          break;
        }
    if (moved < 0) return base;
    base.push_back(universe_[static_cast<std::size_t>(moved)]);
    current = current.pointwise_stabiliser({universe_[static_cast<std::size_t>(moved)]}, cap);
  }
}

Permutation parse_cycles(const std::string& text,
                         const std::vector<std::string>& universe) {
  auto index_of = [&universe](const std::string& name) -> std::uint32_t {
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (universe[i] == name) return static_cast<std::uint32_t>(i);
    throw std::invalid_argument("cycle names unknown point: " + name);
  };

  std::vector<std::uint32_t> images(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i)
    images[i] = static_cast<std::uint32_t>(i);
  std::vector<bool> used(universe.size(), false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size())
        throw std::invalid_argument("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
             text[pos] != ')' && text[pos] != '(')
        ++pos;
      std::string name = text.substr(start, pos - start);
      std::uint32_t point = index_of(name);
      if (used[point])
        throw std::invalid_argument("point repeated in cycles: " + name);
      used[point] = true;
      cycle.push_back(point);
    }
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) images[cycle[i]] = cycle[i + 1];
    if (cycle.size() > 1) images[cycle.back()] = cycle.front();
    skip_space();
  }
  return Permutation::from_images(std::move(images));
}

std::string format_cycles(const Permutation& g,
                          const std::vector<std::string>& universe) {
  std::ostringstream out;
  std::vector<bool> visited(g.degree(), false);
  bool any = false;
  for (std::uint32_t start = 0; start < g.degree(); ++start) {
    if (visited[start] || g(start) == start) continue;
    any = true;
    out << '(';
    std::uint32_t current = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      first = false;
      out << universe[current];
      visited[current] = true;
      current = g(current);
    } while (current != start);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace lad
