// Copyright the dunklkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <stdexcept>
#include <string>

namespace dunklkit {

// Argument outside a function's supported domain (poles, unsupported ranges).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An iteration (series, Newton, continued fraction) hit its cap before
// converging.  `index` identifies the offending node/term when meaningful.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& msg, long index = -1)
        : std::runtime_error(msg), index(index) {}
    long index;
};

// Adaptive integration ran out of subdivisions.  Carries the best estimate
// reached and the estimator's bound for it.
class SubdivisionCapError : public std::runtime_error {
public:
    SubdivisionCapError(const std::string& msg, double best, double bound)
        : std::runtime_error(msg), best_estimate(best), error_bound(bound) {}
    double best_estimate;
    double error_bound;
};

// A semi-infinite integrand was declared with a non-integrable envelope.
class EnvelopeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A structured-only operation received an unstructured function spec.
class StructureError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Numeric differentiation mode requested beyond its supported order.
class ModeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Matrix handed to the Hermitian eigensolver is not Hermitian.
class NotHermitianError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A kernel evaluation that must be strictly positive came out nonpositive;
// treated as evidence of numerical corruption, not as a value.
class PositivityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Textual spec parse failure with byte offset and the expected token set.
class SpecSyntaxError : public std::invalid_argument {
public:
    SpecSyntaxError(const std::string& msg, std::size_t offset, std::string expected)
        : std::invalid_argument(msg), offset(offset), expected(std::move(expected)) {}
    std::size_t offset;
    std::string expected;
};

} // namespace dunklkit
