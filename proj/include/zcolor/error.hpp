#pragma once

#include <stdexcept>
#include <string>

namespace zcolor {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand dimensions do not fit the operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A diagram or coloring document could not be read.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A diagram violates its structural invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Input outside the domain an operation is defined on.
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

// Parameters violate the hypothesis of a theorem-backed construction.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// The diagram admits only trivial colorings.
class NoNontrivialColoring : public Error {
 public:
  using Error::Error;
};

}  // namespace zcolor
