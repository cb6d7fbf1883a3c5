#ifndef LAD_ERRORS_HPP
#define LAD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lad {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownPointError : Error {
  using Error::Error;
};

// Raised when a bounded enumeration would exceed its cap. Carries the number
// of distinct elements found before giving up.
struct CapExceededError : Error {
  CapExceededError(const std::string& what, std::size_t partial)
      : Error(what), partial_count(partial) {}
  std::size_t partial_count;
};

struct NotATreeError : Error {
  using Error::Error;
};

struct NotACycleGraphError : Error {
  using Error::Error;
};

struct UnknownVertexError : Error {
  using Error::Error;
};

struct UnknownColourError : Error {
  using Error::Error;
};

struct UnknownElementError : Error {
  using Error::Error;
};

struct EmptyDiagramError : Error {
  using Error::Error;
};

struct LadParseError : Error {
  LadParseError(int line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  int line;
};

struct UnbuildableRadiusError : Error {
  using Error::Error;
};

struct BoundaryVertexError : Error {
  using Error::Error;
};

struct NotInLocalGroupError : Error {
  using Error::Error;
};

struct ColourNotFixedError : Error {
  using Error::Error;
};

struct NotDiscreteError : Error {
  using Error::Error;
};

}  // namespace lad

#endif
