#ifndef SUNFLOWER_ERRORS_HPP
#define SUNFLOWER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sunflower {

// Bad arguments, malformed files, violated preconditions. CLI exit code 2.
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// An enumeration guard refused to run. CLI exit code 3.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace sunflower

#endif
