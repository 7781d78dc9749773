#pragma once

#include <stdexcept>
#include <string>

namespace hamspec {

enum class ErrorKind {
  MalformedCharacter,
  Truncation,
  Padding,
  UnsupportedSize,
  CorpusTooLarge,
  BudgetExceeded,
  EigensolverFailure,
  Precondition,
  InvalidArgument,
  Io,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedCharacter: return "malformed-character";
    case ErrorKind::Truncation: return "truncation";
    case ErrorKind::Padding: return "padding";
    case ErrorKind::UnsupportedSize: return "unsupported-size";
    case ErrorKind::CorpusTooLarge: return "corpus-too-large";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::EigensolverFailure: return "eigensolver-failure";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

/// Every failure raised by the library carries a kind so callers (the CLI,
/// the sweep harness) can map it to an exit code or a skip counter.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hamspec
