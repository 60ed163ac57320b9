#pragma once

#include <stdexcept>
#include <string>

namespace malcolmson {

/// Malformed ring spec, element literal, matrix literal or request.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (wrong ring family, shape
/// mismatch, k out of range, non-unit inverse, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A search exceeded a bound that a correct implementation never exceeds.
class BoundOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace malcolmson
