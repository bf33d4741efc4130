#ifndef FROBSTRAT_ERROR_HPP
#define FROBSTRAT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace frobstrat {

enum class ErrorCode {
    DivisionByZero,
    ModulusMismatch,
    PrecisionMismatch,
    PrecisionExhausted,
    InvalidLevel,
    InvalidParameters,
    NotConvex,
    BadStart,
    EndpointMismatch,
    UnsupportedCharacteristic,
    InvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

/* All contract violations surface as this exception; code() tells which. */
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace frobstrat

#endif
