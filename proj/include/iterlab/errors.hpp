#pragma once

#include <stdexcept>
#include <string>

namespace iterlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Objects or matrix shapes do not line up.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (non-disjoint join, f not <= g, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A requested size exceeds what the exhaustive procedures accept.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace iterlab
