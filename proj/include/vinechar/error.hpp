#pragma once

#include <stdexcept>
#include <string>

namespace vinechar {

enum class ErrorKind {
  OrderingViolation,
  NonFinite,
  InvalidUniform,
  ZeroCostBase,
  NoBracket,
  ZeroSequestration,
  EmptyInput,
  LengthMismatch,
  TooFew,
  UnknownSector,
  UnknownVariable,
  InvalidParameter,
  Parse,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so the CLI can map it
// onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace vinechar
