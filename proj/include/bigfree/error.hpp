#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bigfree {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Arguments that violate an operation's precondition (unreduced word,
// non-canonical triple, point outside its segment, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Values drawn from different index-set instances (omega vs omega+1).
class InstanceMismatch : public Error {
 public:
  using Error::Error;
};

// Halving a vector with an odd coordinate.
class HalfError : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace bigfree
