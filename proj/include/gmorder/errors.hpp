#pragma once

#include <stdexcept>
#include <string>

namespace gmorder {

// Numeric evaluation left the representable range (exponent cap, overflow).
// Checkers translate this into an INCONCLUSIVE verdict.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (q >= 1, x < 0, length mismatch...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Scenario file content failed validation.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gmorder
