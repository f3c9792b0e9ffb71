#pragma once

#include <stdexcept>
#include <string>

namespace landaulab {

// Base class for every failure raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Arguments outside an operation's domain.
struct DomainError : Error {
    using Error::Error;
};

// Quadrature grid could not be calibrated, or was used uncalibrated.
struct GridError : Error {
    using Error::Error;
};

// An iterative solver failed to reach its target.
struct ConvergenceError : Error {
    using Error::Error;
};

// Configuration file rejected (missing/ill-typed fields, bad schema).
struct ConfigError : Error {
    using Error::Error;
};

// A certified inequality failed to hold at the requested parameters.
struct CertificateError : Error {
    using Error::Error;
};

}  // namespace landaulab
