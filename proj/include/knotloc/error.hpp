#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotloc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (zero input, reducible factor,
// mismatched lengths, ...). The CLI maps these to exit code 2.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A document is structurally wrong: missing field, wrong type, unknown name.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace knotloc
