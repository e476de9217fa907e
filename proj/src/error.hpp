#pragma once

#include <stdexcept>
#include <string>

namespace qspin {

// Error categories mirror the CLI exit codes and the C API status values:
// 1 invalid input, 2 numerical failure, 3 I/O failure.
enum class ErrorCode { InvalidArgument = 1, Numeric = 2, Io = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_invalid(const std::string& msg) {
    throw Error(ErrorCode::InvalidArgument, msg);
}
[[noreturn]] inline void throw_numeric(const std::string& msg) {
    throw Error(ErrorCode::Numeric, msg);
}
[[noreturn]] inline void throw_io(const std::string& msg) {
    throw Error(ErrorCode::Io, msg);
}

}  // namespace qspin
