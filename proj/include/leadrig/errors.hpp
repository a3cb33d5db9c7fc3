#pragma once

#include <stdexcept>
#include <string>

namespace leadrig {

// Invalid user input: unknown ids, malformed files, violated preconditions.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource limit was hit (enumeration size, solver node budget).
// Computation is aborted rather than degraded to an approximation.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace leadrig
