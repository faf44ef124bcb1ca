#pragma once

#include <stdexcept>
#include <string>

namespace frob {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  ParseError,
  Singular,
  NotFound,
  ShapeMismatch,
  NotAssociative,
  BadUnit,
  AlgebraMismatch,
  NotInvertible,
  Degenerate,
  BadGroupTable,
  InterfaceMismatch,
  NotConnected,
  EmptyDiagram,
  WidthExceeded,
  GiveUp,
  IdentityFailed,
  InvariantViolated,
  Usage,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (tests, CLI
/// exit codes) can branch on it without parsing messages.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Parse failures remember the byte offset of the offending character.
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::ParseError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace frob
