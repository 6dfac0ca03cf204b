#pragma once

#include <stdexcept>

namespace chaoswave {

// Base class for all library failures.
class Error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parameter or value lies outside its documented domain.
class ParamError : public Error {
    using Error::Error;
};

// Array or image dimensions do not match what an operation requires.
class ShapeError : public Error {
    using Error::Error;
};

// Malformed file or container contents (PGM, key file, cipher blob).
class FormatError : public Error {
    using Error::Error;
};

// Filesystem-level failure.
class IoError : public Error {
    using Error::Error;
};

} // namespace chaoswave
