#ifndef CITESWING_ERRORS_HPP
#define CITESWING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace citeswing {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two records share an item_id within one snapshot.
class DuplicateItemId : public Error {
public:
    using Error::Error;
};

// theta = h/e requires e_sq >= 1.
class UndefinedTheta : public Error {
public:
    using Error::Error;
};

// Swing metrics require h >= 1.
class UndefinedH : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Approximate CSF branch requested where theta >= 1.
class BranchError : public Error {
public:
    using Error::Error;
};

// Fewer data points / snapshots than the operation needs.
class InsufficientData : public Error {
public:
    using Error::Error;
};

// Log-space fitting needs strictly positive values.
class NonPositiveValue : public Error {
public:
    using Error::Error;
};

// Two series points share the same t.
class DuplicateTime : public Error {
public:
    using Error::Error;
};

// Fitted exponent violates the k > 0 model constraint.
class ModelViolation : public Error {
public:
    using Error::Error;
};

// Snapshot times must be strictly increasing.
class NonMonotonicTime : public Error {
public:
    using Error::Error;
};

// Malformed input row, non-integer or negative citation count.
class ParseError : public Error {
public:
    using Error::Error;
};

// Structurally invalid document (missing keys, non-monotonic t).
class SchemaError : public Error {
public:
    using Error::Error;
};

// Duplicate (item_id, snapshot) cell in the input.
class DuplicateCell : public Error {
public:
    using Error::Error;
};

// Input contains no data rows / no snapshots.
class EmptyInput : public Error {
public:
    using Error::Error;
};

} // namespace citeswing

#endif
