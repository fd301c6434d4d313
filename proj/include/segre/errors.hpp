#pragma once

#include <stdexcept>
#include <string>

namespace segre {

// Input data failed structural validation: file syntax, schema, value ranges.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical precondition of the requested operation does not hold for the
// given values (zero operand, reg >= dim, pole-order constraints, ...).
class HypothesisError : public std::runtime_error {
public:
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

// Two computation routes that must agree exactly did not. Always a bug in this
// library, never a user error.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace segre
