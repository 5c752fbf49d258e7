#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bruhat {

/// Malformed or inconsistent user input (Dynkin spec, automorphism, cocharacter, case file).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed the configured element bound.
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(std::size_t group_order, std::size_t bound)
      : std::runtime_error("group order " + std::to_string(group_order) +
                           " exceeds element bound " + std::to_string(bound)),
        group_order_(group_order),
        bound_(bound) {}

  std::size_t group_order() const noexcept { return group_order_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t group_order_;
  std::size_t bound_;
};

/// A combinatorial identity that must hold for every valid input was violated.
/// Seeing this means an engine bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bruhat
