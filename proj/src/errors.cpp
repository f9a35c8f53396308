#include "cyk/errors.hpp"

namespace cyk {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DivisionByZero: return "division_by_zero";
        case ErrorCode::IncompatibleOrder: return "incompatible_order";
        case ErrorCode::DegeneratePairing: return "degenerate_pairing";
        case ErrorCode::NotSemisimple: return "not_semisimple";
        case ErrorCode::SplitFieldNeeded: return "split_field_needed";
        case ErrorCode::BadLevel: return "bad_level";
        case ErrorCode::NonQuadraticForm: return "non_quadratic_form";
        case ErrorCode::NotClosed: return "not_closed";
        case ErrorCode::NonInvolutiveTransparentTwist: return "non_involutive_transparent_twist";
        case ErrorCode::MalformedDiagram: return "malformed_diagram";
        case ErrorCode::ColorOutOfRange: return "color_out_of_range";
        case ErrorCode::ResourceLimit: return "resource_limit";
        case ErrorCode::BackendMismatch: return "backend_mismatch";
        case ErrorCode::IndexOutOfRange: return "index_out_of_range";
        case ErrorCode::NotBlowDownable: return "not_blow_downable";
        case ErrorCode::KindMismatch: return "kind_mismatch";
        case ErrorCode::HandlesUnsupported: return "handles_unsupported";
        case ErrorCode::RohlinViolation: return "rohlin_violation";
        case ErrorCode::ParityViolation: return "parity_violation";
        case ErrorCode::NotRealizable: return "not_realizable";
        case ErrorCode::ExponentNotIntegral: return "exponent_not_integral";
        case ErrorCode::K3Unavailable: return "k3_unavailable";
        case ErrorCode::UnsupportedPi1Fermionic: return "unsupported_pi1_fermionic";
        case ErrorCode::SlideContact: return "slide_contact";
        case ErrorCode::ParseError: return "parse_error";
        case ErrorCode::InvariantViolation: return "invariant_violation";
    }
    return "unknown";
}

} // namespace cyk
