#pragma once

#include <stdexcept>
#include <string>

namespace disklab {

enum class ErrorCode {
    invalid_argument,
    parse_error,
    invalid_spec,
    dimension_mismatch,
    range_error,
    unsupported_family,
    hypothesis_violation,
    capacity,
    numeric,
    contract,
    internal,
};

const char* error_code_name(ErrorCode code);

/// All library failures surface as this exception; the C API maps the
/// code to a status enum.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace disklab
