#pragma once

#include <stdexcept>
#include <string>

namespace move {

// Error families mapped to distinct CLI exit codes.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateStatError : std::runtime_error {
    explicit DegenerateStatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace move
