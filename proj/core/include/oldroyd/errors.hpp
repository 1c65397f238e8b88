#pragma once

#include <stdexcept>
#include <string>

namespace oldroyd {

// Invalid parameters, configuration values or mismatched inputs.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation left its domain of validity: non-finite values,
// a negative energy functional, an undefined homogeneous norm.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace oldroyd
