#pragma once

#include <stdexcept>
#include <string>

namespace hybridmat {

// Evaluation of a symbolic size reached a parameter the environment does not bind.
class UnboundParameter : public std::runtime_error {
public:
    explicit UnboundParameter(std::string name)
        : std::runtime_error("unbound parameter: " + name), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// Concatenation of two intervals whose junction endpoints differ structurally.
class EndpointMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Tuple operations with inconsistent arities.
class ArityMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands whose symbolic totals do not line up for the requested operation.
class ShapeMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A term that survived cancellation was forced at a point where its payload
// is undefined.
class UndefinedTermForced : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (size expressions, intervals, instance files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structurally well-formed input that violates an instance-level constraint.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hybridmat
