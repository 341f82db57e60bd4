#include "ks7/errors.hpp"

namespace ks7 {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::ModuliNotCoprime: return "ModuliNotCoprime";
    case ErrorCode::UnequalSums: return "UnequalSums";
    case ErrorCode::DegenerateOrder: return "DegenerateOrder";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InconsistentFixture: return "InconsistentFixture";
    case ErrorCode::DivisibilityFailure: return "DivisibilityFailure";
    case ErrorCode::ParityFailure: return "ParityFailure";
    case ErrorCode::CongruenceFailure: return "CongruenceFailure";
    case ErrorCode::MismatchedOrder: return "MismatchedOrder";
    case ErrorCode::WrongFamily: return "WrongFamily";
    case ErrorCode::MissingFixture: return "MissingFixture";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

} // namespace ks7
