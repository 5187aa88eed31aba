#pragma once

#include <stdexcept>
#include <string>

namespace maint {

// Fatal analysis error. CLI maps it to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string &what) : std::runtime_error(what) {}
};

// Bad argument to a library entry point.
class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string &what) : Error(what) {}
};

} // namespace maint
