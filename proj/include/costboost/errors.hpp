#pragma once

#include <stdexcept>
#include <string>

namespace costboost {

// Config / usage problems. CLI maps these to exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input data (parse failures, dimension mismatches, invalid labels).
// CLI maps these to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Broken internal invariant. CLI maps these to exit code 3.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace costboost
