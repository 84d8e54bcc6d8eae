#pragma once

#include <stdexcept>
#include <string>

namespace sgt {

// Malformed shapes or rows: wrong lengths, ordering violations.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// Parameter outside its admissible range (alpha, q constraints, floors/caps).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Enumeration exceeded a configured cardinality cap.
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sgt
