#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordtype {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A table failed one of the group axioms.
class NotAGroup : public Error {
 public:
  explicit NotAGroup(const std::string& reason) : Error("not a group: " + reason) {}
};

// A constructor or operation was called outside its preconditions.
class BadParameter : public Error {
 public:
  explicit BadParameter(const std::string& what) : Error("bad parameter: " + what) {}
};

class NotASubgroup : public Error {
 public:
  explicit NotASubgroup(const std::string& what) : Error("not a subgroup: " + what) {}
};

class NotNormal : public Error {
 public:
  explicit NotNormal(const std::string& what) : Error("subgroup is not normal: " + what) {}
};

class InvalidAction : public Error {
 public:
  explicit InvalidAction(const std::string& reason) : Error("invalid action: " + reason) {}
};

class AmbiguousCenter : public Error {
 public:
  explicit AmbiguousCenter(const std::string& what)
      : Error("ambiguous center: " + what) {}
};

// Two independent computations disagreed; indicates an engine bug.
class InternalInconsistency : public Error {
 public:
  explicit InternalInconsistency(const std::string& what)
      : Error("internal inconsistency: " + what) {}
};

// Malformed Cayley-table file.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

// Malformed group expression; position is a 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected)
      : Error("syntax error at position " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class TheoremViolation : public Error {
 public:
  TheoremViolation(std::string theorem, std::string group, const std::string& note)
      : Error("theorem " + theorem + " violated on " + group + ": " + note),
        theorem_(std::move(theorem)),
        group_(std::move(group)) {}

  const std::string& theorem() const noexcept { return theorem_; }
  const std::string& group() const noexcept { return group_; }

 private:
  std::string theorem_;
  std::string group_;
};

}  // namespace ordtype
