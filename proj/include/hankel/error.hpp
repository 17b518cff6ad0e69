#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hankel {

enum class ErrorKind {
  IndexBeyondKnownMoments,
  NotSquare,
  SizeCapExceeded,
  SpecOutOfRange,
  HankelSingular,
  DenominatorVanishes,
  TraceUndefined,
  IndexOutOfRange,
  DivisionByZero,
  PreconditionViolation,
  ParseError,
};

std::string_view kind_name(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind is machine readable and is
/// what the CLI maps onto exit codes; the message carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hankel
