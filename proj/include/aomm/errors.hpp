#pragma once

#include <stdexcept>
#include <string>

namespace aomm {

// Configuration could not be parsed, is incomplete, or is unphysical.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal numerical contract was violated (residual too large,
// cross-route disagreement, undefined observable).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

class SingularSystemError : public NumericalError {
public:
    explicit SingularSystemError(const std::string& msg) : NumericalError(msg) {}
};

// Time-domain integration left the stable regime.
class InstabilityError : public std::runtime_error {
public:
    explicit InstabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace aomm
