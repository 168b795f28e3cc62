#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (e.g. non-positive Bessel argument).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Bessel order outside the supported range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Invalid geometry: radial ratio y <= 1, bad cylinder radius, duplicate cog angles.
class GeometryError : public Error {
public:
    using Error::Error;
};

/// Kernel evaluated at lambda = 0.
class SingularPointError : public Error {
public:
    using Error::Error;
};

/// Internal identity violated (vanishing Wronskian-type determinant).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature exhausted its subdivision budget.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double estimate, double error)
        : Error(what), estimate_(estimate), error_(error) {}

    double estimate() const noexcept { return estimate_; }
    double error() const noexcept { return error_; }

private:
    double estimate_;
    double error_;
};

/// Mode sum not converged at the requested truncation.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double relative_change)
        : Error(what), relative_change_(relative_change) {}

    double relative_change() const noexcept { return relative_change_; }

private:
    double relative_change_;
};

}  // namespace casimir
