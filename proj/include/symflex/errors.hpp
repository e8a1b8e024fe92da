#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symflex {

/// Input that cannot be turned into a graph at all: unknown endpoints, loops,
/// duplicate edges, an omega that is not a permutation of the vertices.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on input that violates its documented precondition.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed JSON or a JSON document that does not match the expected schema.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive search refused because the instance is larger than the
/// configured bound. Never raised after partial results were produced.
class SearchBoundExceeded : public std::runtime_error {
 public:
  SearchBoundExceeded(std::string what_is_bounded, std::size_t actual, std::size_t bound)
      : std::runtime_error("search bound exceeded: " + what_is_bounded + " = " +
                           std::to_string(actual) + " > " + std::to_string(bound)),
        actual_(actual),
        bound_(bound) {}

  std::size_t actual() const noexcept { return actual_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t actual_;
  std::size_t bound_;
};

}  // namespace symflex
