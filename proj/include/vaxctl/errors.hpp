#ifndef VAXCTL_ERRORS_HPP
#define VAXCTL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vaxctl {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter, scenario field, or state violates one of its invariants.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Malformed input file (scenario or CSV); message carries line/field context.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A non-finite value appeared during integration; message names the first bad node.
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// Filesystem failure; message carries the path.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace vaxctl

#endif
