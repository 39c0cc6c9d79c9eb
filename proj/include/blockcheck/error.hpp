#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blockcheck {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed DIMACS / QDIMACS / trace / model input.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A brute-force procedure would exceed its configured variable cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t count, std::size_t cap)
      : Error(what + ": " + std::to_string(count) + " variables exceed cap " +
              std::to_string(cap)),
        count_(count),
        cap_(cap) {}

  std::size_t count() const { return count_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t count_;
  std::size_t cap_;
};

/// Intermediate formula growth exceeded its limit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Model reconstruction could not repair a removed clause.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace blockcheck
