#pragma once

#include <stdexcept>
#include <string>

namespace cayleyforge {

// Bad user input: unknown symbols, malformed presentation files, out-of-range
// parameters.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A presentation file could not be parsed. Carries the offending line number
// (1-based, 0 when not tied to a line).
class ParseError : public InputError {
 public:
  ParseError(std::string const& msg, std::size_t line)
      : InputError(line == 0 ? msg : "line " + std::to_string(line) + ": " + msg),
        _line(line) {}

  std::size_t line() const noexcept { return _line; }

 private:
  std::size_t _line;
};

// An operation was called outside its contract, e.g. reduction over a system
// that is not length-reducing, or equality testing over an uncertified system.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A word handed to a normal-form classifier was reducible, or its shape
// does not fit any of the known normal-form shapes for that monoid.
class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cayleyforge
