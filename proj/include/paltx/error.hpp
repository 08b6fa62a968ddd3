#pragma once

#include <stdexcept>
#include <string>

namespace paltx {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No peak candidates could be formed (only possible for an image with no pixels).
class EmptyPeakSpace : public Error {
public:
    using Error::Error;
};

/// Two images (or an image and a mask) that must be aligned have different sizes.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A file could not be read, decoded, or written.
class IoError : public Error {
public:
    using Error::Error;
};

class UnreadableMask : public IoError {
public:
    using IoError::IoError;
};

}  // namespace paltx
