#pragma once

#include <stdexcept>
#include <string>

namespace irfocus {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Mismatched or unusable dimensions (length mismatch, frame too small).
class SizeError : public Error {
    using Error::Error;
};

/// A value outside its legal range (pixel counts, position indices).
class RangeError : public Error {
    using Error::Error;
};

/// Pixel coordinates that fall outside the frame for the requested step.
class BoundsError : public Error {
    using Error::Error;
};

/// Argument outside the domain of a closed-form physical formula.
class DomainError : public Error {
    using Error::Error;
};

/// Operation that needs at least one element got none.
class EmptyError : public Error {
    using Error::Error;
};

/// Malformed on-disk data; the message names the offending field.
class FormatError : public Error {
    using Error::Error;
};

/// Filesystem trouble (missing file, unwritable path).
class IoError : public Error {
    using Error::Error;
};

} // namespace irfocus
