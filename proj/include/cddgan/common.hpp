#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cddgan {

// Fatal contract violations (bad shapes, invalid parameters, missing files).
struct FatalError : std::runtime_error {
    explicit FatalError(const std::string& msg) : std::runtime_error(msg) {}
};

// A pipeline stage was asked to run before its inputs exist. CLI exit code 2.
struct MissingInputError : std::runtime_error {
    explicit MissingInputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Training produced a non-finite loss. CLI exit code 3.
struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] inline void fatal(const std::string& msg) { throw FatalError(msg); }

inline void check(bool cond, const std::string& msg) {
    if (!cond) fatal(msg);
}

} // namespace cddgan
