#pragma once

#include <stdexcept>
#include <string>

namespace sae {

/// Invalid scenario, sweep or geometry description (CLI exit code 2).
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure inside a processing stage (CLI exit code 3).
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sae
