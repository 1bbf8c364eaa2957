#pragma once

#include <stdexcept>
#include <string>

namespace signalling {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input: rational literals, matrix files, priors.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Shapes that do not fit together (non-square matrix, wrong row length).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Input exceeds the size an exact exponential algorithm is allowed to handle.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// A value outside the domain of an operation (partial map evaluated off its
/// domain, infeasible program, invalid probability).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The operation is defined only for a subset of inputs (e.g. q = 3).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

}  // namespace signalling
