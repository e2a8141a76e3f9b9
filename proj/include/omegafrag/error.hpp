#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omegafrag {

enum class ErrorCode {
  InvalidInput,
  SyntaxError,
  NullableOmega,
  BudgetExceeded,
  TailKindMismatch,
  NotMember,
  PreconditionViolated,
  DepthExceeded,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception carried by every failing library operation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse error with the byte offset of the offending character.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Caps on exhaustive constructions. Overridable through OMEGA_FRAG_BUDGET.
struct Budget {
  std::size_t max_elements = 5000;
  bool force = false;  // lifts the enumeration guards on monomials and lassos

  static Budget from_environment();
};

}  // namespace omegafrag
