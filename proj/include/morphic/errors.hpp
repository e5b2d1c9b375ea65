#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace morphic {

/// Malformed Cayley tables (wrong sizes, indices out of range).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction would exceed the configured order cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t projected, std::size_t cap)
      : std::runtime_error("order " + std::to_string(projected) + " exceeds cap " +
                           std::to_string(cap)),
        projected_(projected),
        cap_(cap) {}

  std::size_t projected() const noexcept { return projected_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t projected_;
  std::size_t cap_;
};

/// Syntax or semantic error in a ring expression, with a 0-based column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at column " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace morphic
