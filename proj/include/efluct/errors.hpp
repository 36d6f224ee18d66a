#pragma once

#include <stdexcept>
#include <string>

namespace efluct {

// Malformed arguments: bad words, odd sizes, violated preconditions.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured enumeration or work cap would be exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two routes that must agree did not.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace efluct
