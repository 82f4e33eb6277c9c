#pragma once

#include <stdexcept>
#include <string>

namespace cann {

/// Invalid configuration: bad sizes, incompatible grids/time steps, unknown keys.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Vector or matrix dimension mismatch.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-finite value produced during training or time marching.
struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A user-supplied function returned a non-finite value.
struct EvalError : std::runtime_error {
    explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Jump diagnostics found zero or several mid-state crossings.
struct JumpError : std::runtime_error {
    explicit JumpError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad command-line usage (maps to exit code 2 in the CLI).
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cann
