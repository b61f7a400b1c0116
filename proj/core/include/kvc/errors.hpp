#pragma once

#include <stdexcept>
#include <string>

namespace kvc {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidVertex : Error { using Error::Error; };
struct InvalidK : Error { using Error::Error; };
struct InvalidEpsilon : Error { using Error::Error; };
struct InvalidDelta : Error { using Error::Error; };
struct InvalidWeight : Error { using Error::Error; };
struct InvalidColoring : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
struct NotUnweighted : Error { using Error::Error; };
struct LiftError : Error { using Error::Error; };
struct SolverContractError : Error { using Error::Error; };
struct OracleTooLarge : Error { using Error::Error; };

/// Parse failures carry the 1-based line number of the offending input line.
struct ParseError : Error {
    ParseError(const std::string& message, int line)
        : Error("line " + std::to_string(line) + ": " + message), line_number(line) {}
    int line_number;
};

/// Broken internal invariant. Maps to exit code 4 in the CLI.
struct InternalError : Error { using Error::Error; };

namespace detail {
[[noreturn]] inline void assert_fail(const char* expr, const char* file, int line) {
    throw InternalError(std::string("internal assertion failed: ") + expr + " at " + file + ":" +
                        std::to_string(line));
}
}  // namespace detail

}  // namespace kvc

#define KVC_ASSERT(cond) \
    ((cond) ? static_cast<void>(0) : ::kvc::detail::assert_fail(#cond, __FILE__, __LINE__))
