#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ks7 {

enum class ErrorCode {
    NotCoprime,
    ModuliNotCoprime,
    UnequalSums,
    DegenerateOrder,
    ParseError,
    InconsistentFixture,
    DivisibilityFailure,
    ParityFailure,
    CongruenceFailure,
    MismatchedOrder,
    WrongFamily,
    MissingFixture,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Domain error raised by every core module. The code's name is what the CLI prints.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

private:
    ErrorCode code_;
};

} // namespace ks7
