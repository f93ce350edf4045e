#pragma once

#include <stdexcept>
#include <string>

namespace intpart {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input text (graph6, edge lists, fractions, generator specs) could not be parsed.
class ParseError : public Error {
public:
    enum class Kind { BadHeader, TruncatedBody, TooLarge, BadBody, BadSyntax };

    ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Arguments outside the domain of an operation (wrong degree, bad family parameter, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A vertex set or partition does not match the vertex count of the graph it is used with.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A node or restart budget ran out before the operation could finish.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// A size guard on an exponential routine was exceeded.
class GuardError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of a transfer or construction does not hold.
class ContractError : public Error {
public:
    ContractError(const std::string& what, int vertex = -1) : Error(what), vertex_(vertex) {}

    /// Offending vertex, or -1 when the failure is not tied to a vertex.
    int vertex() const noexcept { return vertex_; }

private:
    int vertex_;
};

/// A construction cannot be applied to this input (e.g. a class-2 part in a bridge composition).
class InapplicableError : public Error {
public:
    using Error::Error;
};

/// A guaranteed property failed to hold. Indicates a bug or a counterexample to a proven claim.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace intpart
