#pragma once

#include <stdexcept>
#include <string>

namespace hypervis {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two operands live in hypercubes of different dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Request exceeds a hard capacity limit (path enumeration, dimension cap).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Malformed text input (vertex strings, set files, DIMACS).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypervis
