#pragma once

#include <stdexcept>
#include <string>

namespace peis {

/// Machine-readable failure categories. The CLI maps these onto exit codes.
enum class ErrorCode { usage, precondition, pole, precision };

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::usage: return "usage";
        case ErrorCode::precondition: return "precondition";
        case ErrorCode::pole: return "pole";
        case ErrorCode::precision: return "precision";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, const std::string& what) {
    if (!condition) fail(ErrorCode::precondition, what);
}

}  // namespace peis
