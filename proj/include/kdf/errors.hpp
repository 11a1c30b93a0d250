#pragma once

#include <stdexcept>
#include <string>

namespace kdf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A value fails a structural invariant (Hermiticity, PSD, completeness...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Rounding produced something that cannot come from valid input.
class NumericalError : public Error {
public:
    using Error::Error;
};

} // namespace kdf
