#pragma once

#include <stdexcept>
#include <string>

namespace cyk {

// Stable error codes. The CLI prints these verbatim, so renaming one is a
// breaking change to the output format.
enum class ErrorCode {
    DivisionByZero,
    IncompatibleOrder,
    DegeneratePairing,
    NotSemisimple,
    SplitFieldNeeded,
    BadLevel,
    NonQuadraticForm,
    NotClosed,
    NonInvolutiveTransparentTwist,
    MalformedDiagram,
    ColorOutOfRange,
    ResourceLimit,
    BackendMismatch,
    IndexOutOfRange,
    NotBlowDownable,
    KindMismatch,
    HandlesUnsupported,
    RohlinViolation,
    ParityViolation,
    NotRealizable,
    ExponentNotIntegral,
    K3Unavailable,
    UnsupportedPi1Fermionic,
    SlideContact,
    ParseError,
    InvariantViolation,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace cyk
