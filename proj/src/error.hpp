#ifndef COBEL_ERROR_HPP
#define COBEL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cobel {

// Error categories exposed across the C API boundary as status codes.
enum class ErrorCode {
    Parse,        // malformed document or schema violation
    Validation,   // well-formed but inconsistent model data
    Arithmetic,   // division by zero, irrational literal, negative where >= 0 required
    Bound,        // exploration or enumeration bound exceeded
    Unsupported,  // requested mode not available for the effect kind
    Contract,     // precondition violated by the caller
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace cobel

#endif
