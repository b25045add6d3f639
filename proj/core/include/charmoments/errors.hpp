#pragma once

#include <stdexcept>
#include <string>

namespace charmoments {

// Malformed or out-of-contract input: bad color words, invalid group
// presets, non-homomorphic push-forward data, and the like.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A computation was requested outside the parameter regime where the
// underlying identity is valid (e.g. dimension below the basis threshold).
class RegimeError : public std::domain_error {
public:
    explicit RegimeError(const std::string& what) : std::domain_error(what) {}
};

// A computation exceeded a configured resource limit.  attained_k reports
// how far the computation got before hitting the limit (-1 if nothing
// was completed).
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, int attained_k = -1)
        : std::runtime_error(what), attained_k(attained_k) {}

    int attained_k;
};

} // namespace charmoments
