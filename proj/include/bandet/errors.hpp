#pragma once

#include <stdexcept>
#include <string>

namespace bandet {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Binary operation on elements of two different rings.
class MixedRingError : public Error {
public:
    using Error::Error;
};

/// An integer multiple in a closed form is not an exact integer.
class DivisibilityError : public Error {
public:
    using Error::Error;
};

/// A division inside an algorithm that must be exact was not.
class InexactDivisionError : public Error {
public:
    using Error::Error;
};

class IndexOutOfRangeError : public Error {
public:
    using Error::Error;
};

/// Operation refused because the input exceeds its cost guard.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// per + det (or T + c) came out odd; the parity split is impossible.
class ParityError : public Error {
public:
    using Error::Error;
};

class InvalidPermutationError : public Error {
public:
    using Error::Error;
};

/// Malformed BandSpec, matrix, or serialized value.
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// Two computations that must agree did not.
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace bandet
