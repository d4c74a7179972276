#pragma once

#include <stdexcept>
#include <string>

namespace affclass {

/// Base class of all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vector/matrix operands of incompatible sizes.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Inversion (or similar) requested on a matrix with zero determinant.
class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// A named parameter set or scalar argument violates its domain.
class BadParameter : public Error {
public:
    using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A matrix passed as an automorphism fails the automorphism check.
class NotAutomorphism : public Error {
public:
    using Error::Error;
};

/// The operation only supports the built-in algebra catalog.
class NotCatalogAlgebra : public Error {
public:
    using Error::Error;
};

/// A normalization step needs an eigenvalue that does not exist over the
/// rationals (negative or non-square discriminant).
class FieldExtensionRequired : public Error {
public:
    using Error::Error;
};

/// Internal consistency failure: a reduction branch was entered whose
/// stated guard does not actually hold for the data. Indicates a bug in
/// the case analysis, never a problem with the input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace affclass
