#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dirac {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A product that the distribution calculus leaves undefined: Dirac times
/// Dirac, or Heaviside times Dirac in the same variable.
class ForbiddenProduct : public Error {
public:
    using Error::Error;
};

/// Precondition violated by an argument (empty interval, shift along the diagonal, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An operator outside the class an action is defined for.
class UnsupportedOperator : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

}  // namespace dirac
