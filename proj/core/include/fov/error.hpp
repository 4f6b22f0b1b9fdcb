#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fov {

enum class ErrorCode {
  OrderCapExceeded,
  InvalidPermutation,
  NotASubgroup,
  NonCoprimeModuli,
  ModulusMismatch,
  NonCoprime,
  EigenspaceSplitFailure,
  LiftOutOfRange,
  RowMatchFailure,
  HypothesesNotMet,
  UnknownSuite,
  ParseError,
  HashMismatch,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the toolkit carries one of the codes above so
/// callers (and the CLI exit-code contract) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fov
