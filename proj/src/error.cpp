#include "frobstrat/error.hpp"

namespace frobstrat {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ModulusMismatch: return "ModulusMismatch";
        case ErrorCode::PrecisionMismatch: return "PrecisionMismatch";
        case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorCode::InvalidLevel: return "InvalidLevel";
        case ErrorCode::InvalidParameters: return "InvalidParameters";
        case ErrorCode::NotConvex: return "NotConvex";
        case ErrorCode::BadStart: return "BadStart";
        case ErrorCode::EndpointMismatch: return "EndpointMismatch";
        case ErrorCode::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

}  // namespace frobstrat
