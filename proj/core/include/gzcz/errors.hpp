#pragma once

#include <stdexcept>
#include <string>

namespace gzcz {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two sequences that must share a length do not.
struct LengthMismatchError : Error {
    using Error::Error;
};

/// Two sequences that must share a phase modulus do not.
struct ModulusMismatchError : Error {
    using Error::Error;
};

/// Negation requested on an odd modulus, where -1 is not a root of unity.
struct OddModulusError : Error {
    using Error::Error;
};

/// A code that must be square (set count == rows per set) is not.
struct ShapeError : Error {
    using Error::Error;
};

/// Two codes that must share a set size do not.
struct SetSizeMismatchError : Error {
    using Error::Error;
};

/// A pair offered as a complementary mate fails the mate conditions.
struct MateError : Error {
    using Error::Error;
};

/// A sign quadruple violates x1*x2 + x3*x4 == 0.
struct SignConditionError : Error {
    using Error::Error;
};

/// Requested seed identifier is not in the registry.
struct UnknownSeedError : Error {
    using Error::Error;
};

/// An input promised to be a complete complementary code fails verification.
struct InvalidCccError : Error {
    using Error::Error;
};

/// A sequence-set or CSV file does not conform to the expected format.
struct FormatError : Error {
    using Error::Error;
};

} // namespace gzcz
