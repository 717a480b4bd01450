// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace padiclab {

enum class ErrorCode {
    InvalidArgument = 1,  // precondition violated by caller input
    Domain = 2,           // evaluation at a pole or outside the function's domain
    Convergence = 3,      // series or quadrature failed to converge
    Io = 4,               // file missing, unreadable or malformed
    Range = 5,            // request exceeds a configured size cap
};

/// Every failure raised by the library carries one of the codes above so the
/// C layer can map it onto a status value without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, const std::string& what) {
    if (!cond) fail(ErrorCode::InvalidArgument, what);
}

}  // namespace padiclab
