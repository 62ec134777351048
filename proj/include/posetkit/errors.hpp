#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace posetkit {

// Precondition and construction failures. Everything derives from Error so
// callers (the CLI in particular) can catch one type.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class CycleError : public Error {
public:
  using Error::Error;
};

class NotAnOrder : public Error {
public:
  using Error::Error;
};

class NotAFunction : public Error {
public:
  using Error::Error;
};

class MissingInvolution : public Error {
public:
  MissingInvolution() : Error("poset has no involution") {}
  using Error::Error;
};

class MissingBounds : public Error {
public:
  MissingBounds() : Error("poset lacks a bottom or top element") {}
  using Error::Error;
};

class NotComplemented : public Error {
public:
  NotComplemented() : Error("involution is not a complementation") {}
  using Error::Error;
};

class NotALattice : public Error {
public:
  NotALattice() : Error("poset is not a lattice") {}
  using Error::Error;
};

class SizeLimitExceeded : public Error {
public:
  using Error::Error;
};

class InvalidDiagram : public Error {
public:
  using Error::Error;
};

class NotComplementClosed : public Error {
public:
  using Error::Error;
};

class UnboundedPart : public Error {
public:
  using Error::Error;
};

class NoRelativePseudocomplement : public Error {
public:
  NoRelativePseudocomplement(std::size_t a, std::size_t b, const std::string& what)
      : Error(what), a_(a), b_(b) {}
  std::size_t a() const { return a_; }
  std::size_t b() const { return b_; }

private:
  std::size_t a_, b_;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_, column_;
};

/// Raised when two routes that must agree by a theorem disagree. Seeing one
/// means a bug in this library, not bad input.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace posetkit
