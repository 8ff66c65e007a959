#pragma once

#include <stdexcept>
#include <string>

namespace symporb {

// Base of everything the library throws on bad input or violated contracts.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (mismatched degrees, not an arc,
// bottom not below top, singular flag).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Enumeration or interval work would exceed the configured degree cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Malformed text or file input. `position` is a 1-based character or row
// index when one is known, 0 otherwise.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = 0)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An internal self-check failed. Never expected; signals a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace symporb
