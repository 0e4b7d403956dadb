#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpa {

// Input that cannot be turned into a graph or an element. Carries the
// 1-based line (graph files) or column (expressions) when known, else 0.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t location = 0)
      : std::runtime_error(location == 0 ? what
                                         : what + " (at " +
                                               std::to_string(location) + ")"),
        location_(location) {}

  std::size_t location() const noexcept { return location_; }

 private:
  std::size_t location_;
};

// An id that does not name a vertex/edge of the graph at hand.
class UnknownIdError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arithmetic between elements of different algebras or fields, or an
// operation whose mathematical precondition fails (e.g. an infinite count).
class AlgebraError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lpa
