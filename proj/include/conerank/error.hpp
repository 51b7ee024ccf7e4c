#pragma once

#include <stdexcept>
#include <string>

namespace conerank {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad face, out-of-range vertex, unparsable text.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A notion that is not defined for the given object (subfacets of a
/// non-pure complex, regularity of the zero ideal, ...).
class Undefined : public Error {
public:
    using Error::Error;
};

/// A constructed or supplied presentation failed radical verification.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

/// A Gröbner computation hit its S-pair budget before reaching a verdict.
class Inconclusive : public Error {
public:
    using Error::Error;
};

}  // namespace conerank
