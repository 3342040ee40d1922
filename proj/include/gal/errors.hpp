#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gal {

/// Base class for every input/contract error raised by the library.
/// The CLI maps all of these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression or literal. `offset()` is a 1-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error("at offset " + std::to_string(offset) + ": " + message), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable '" + name + "'"), name_(name) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class OutOfWindow : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace gal
