#pragma once

#include <stdexcept>
#include <string>

namespace hullpart {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Point set spans fewer than two dimensions (collinear, or < 3 distinct points).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// A polygon was added out of decreasing min-vertex order.
class OrderViolation : public Error {
 public:
  using Error::Error;
};

/// Disjoint-mode input whose polygons have overlapping interiors.
class NotDisjoint : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration requested for too many polygons.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// Malformed instance file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A solve exceeded its deadline.
class SolveCancelled : public Error {
 public:
  using Error::Error;
};

}  // namespace hullpart
