#include "omegafrag/error.hpp"

#include <cstdlib>
#include <string>

namespace omegafrag {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NullableOmega: return "NullableOmega";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::TailKindMismatch: return "TailKindMismatch";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
  }
  return "Unknown";
}

Budget Budget::from_environment() {
  Budget b;
  if (const char* env = std::getenv("OMEGA_FRAG_BUDGET")) {
    try {
      const unsigned long long v = std::stoull(env);
      if (v > 0) b.max_elements = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, std::string("OMEGA_FRAG_BUDGET is not a number: ") + env);
    }
  }
  return b;
}

}  // namespace omegafrag
