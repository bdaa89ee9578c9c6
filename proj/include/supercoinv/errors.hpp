#pragma once

#include <stdexcept>
#include <string>

namespace supercoinv {

// Operands live in polynomial rings with different variable counts.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A variable, hyperplane or subset index is outside its admissible range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Precondition of an algebraic operation is violated (division by zero
// polynomial, inhomogeneous input where homogeneity is required, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation exceeded a configured size guard.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace supercoinv
