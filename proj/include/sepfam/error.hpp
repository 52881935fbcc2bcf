#pragma once

#include <stdexcept>
#include <string>

namespace sepfam {

// An argument names an element outside the ground set.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A request exceeds a fixed enumeration or representation bound.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Arguments fall outside the range where a formula or operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input does not have the required shape (not a tree, bad sequence length,
// nonzero first row, ...).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed external input (documents, edge lists).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sepfam
