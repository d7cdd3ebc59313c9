#pragma once

#include <stdexcept>
#include <string>

namespace evw {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-contract input: bad labels, bad expressions,
// misaligned rates, resource caps. CLI maps this to exit code 2.
class input_error : public error {
public:
    explicit input_error(const std::string& what) : error(what) {}
};

// The requested quantity has no defined value (total conflict, 0/0
// weight, interpretation of a non-supporting weight). CLI exit code 3.
class undefined_error : public error {
public:
    explicit undefined_error(const std::string& what) : error(what) {}
};

// Thrown when an intermediate focal-set count would exceed the
// configured limit. Subclass of input_error so the default handling
// still reports it as a usage problem.
class focal_limit_error : public input_error {
public:
    explicit focal_limit_error(const std::string& what) : input_error(what) {}
};

} // namespace evw
