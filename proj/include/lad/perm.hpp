#ifndef LAD_PERM_HPP
#define LAD_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lad/errors.hpp"

namespace lad {

// Hard bound on bounded group enumeration; desk-scale local actions stay far
// below it.
inline constexpr std::size_t kEnumerationCap = 10000;

// A total bijection of {0, ..., n-1}, used as a permutation of an ordered
// point universe held by the owning PermGroup.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);

  // Validates bijectivity.
  static Permutation from_images(std::vector<std::uint32_t> images);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;

  // Applies *this first, then other.
  Permutation then(const Permutation& other) const;
  Permutation inverse() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

 private:
  explicit Permutation(std::vector<std::uint32_t> images)
      : images_(std::move(images)) {}

  std::vector<std::uint32_t> images_;
};

// A finite permutation group on an explicit ordered point universe, given by
// generators. All operations are pure; elements are enumerated by BFS over
// generator words, which fixes a deterministic order.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::vector<std::string> universe, std::vector<Permutation> generators);

  static PermGroup trivial(std::vector<std::string> universe);

  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::size_t degree() const { return universe_.size(); }

  // Throws UnknownPointError.
  std::uint32_t index_of(const std::string& point) const;

  // Smallest generator-closed set containing the point, in BFS order.
  std::vector<std::string> orbit(const std::string& point) const;

  // Orbit partition; blocks ordered by first universe occurrence, block
  // contents in BFS order.
  std::vector<std::vector<std::string>> orbits() const;

  // All group elements if their number is at most cap, in BFS order over
  // generator words; throws CapExceededError otherwise.
  std::vector<Permutation> enumerate(std::size_t cap = kEnumerationCap) const;

  bool is_trivial() const;
  bool is_semiregular(std::size_t cap = kEnumerationCap) const;
  bool contains(const Permutation& g, std::size_t cap = kEnumerationCap) const;

  // Subgroup fixing every listed point, presented by its non-identity
  // elements as generators.
  PermGroup pointwise_stabiliser(const std::vector<std::string>& points,
                                 std::size_t cap = kEnumerationCap) const;

  // Greedy base: repeatedly stabilise the first moved universe point.
  std::vector<std::string> find_base(std::size_t cap = kEnumerationCap) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.universe_ == b.universe_ && a.generators_ == b.generators_;
  }

 private:
  std::vector<std::string> universe_;
  std::vector<Permutation> generators_;
};

// Parses disjoint-cycle notation over the given universe, e.g. "(1 2 3)(4 5)".
// The empty string and "()" denote the identity. Throws std::invalid_argument
// on malformed input or unknown points.
Permutation parse_cycles(const std::string& text,
                         const std::vector<std::string>& universe);

// Canonical cycle emission: cycles start at their smallest universe index and
// are ordered by it; fixed points omitted; identity prints as "()".
std::string format_cycles(const Permutation& g,
                          const std::vector<std::string>& universe);

}  // namespace lad

#endif
