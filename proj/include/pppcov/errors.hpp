#pragma once

#include <stdexcept>
#include <string>

namespace pppcov {

// Base for all library errors. The CLI maps InvalidConfig to exit code 2 and
// every other subclass to exit code 3.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidConfig : Error {
    explicit InvalidConfig(const std::string& msg) : Error(msg) {}
};

// Series or iteration failed to reach its target accuracy within budget.
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& msg) : Error(msg) {}
};

// Adaptive quadrature could not meet its tolerance.
struct QuadratureFailure : Error {
    explicit QuadratureFailure(const std::string& msg) : Error(msg) {}
};

// Coverage integration produced an implausible value or failed to converge.
struct IntegrationFailure : Error {
    explicit IntegrationFailure(const std::string& msg) : Error(msg) {}
};

// laplace_desired has a pole at s = -1.
struct PoleAtMinusOne : Error {
    explicit PoleAtMinusOne(const std::string& msg) : Error(msg) {}
};

// ZF channel draw was numerically singular even after resampling.
struct SingularChannel : Error {
    explicit SingularChannel(const std::string& msg) : Error(msg) {}
};

// Simulation window fails the truncated-interference check.
struct WindowTooSmall : Error {
    explicit WindowTooSmall(const std::string& msg) : Error(msg) {}
};

} // namespace pppcov
