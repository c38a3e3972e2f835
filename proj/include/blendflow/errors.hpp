#pragma once

#include <stdexcept>
#include <string>

namespace blendflow {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid physical input (non-positive density, bad law parameters, ...).
struct DomainError : Error {
    using Error::Error;
};

// Requested value lies outside the range of an invertible map.
struct RangeError : Error {
    using Error::Error;
};

// Adaptive quadrature could not reach the requested tolerance.
struct QuadratureError : Error {
    using Error::Error;
};

// Iterative method (root finding, ODE stepping, shooting) failed.
struct NonconvergenceError : Error {
    using Error::Error;
};

// Malformed scenario or invalid run configuration.
struct ConfigError : Error {
    using Error::Error;
};

// A reconstructed density fell to the vacuum floor during a run.
struct VacuumError : Error {
    VacuumError(const std::string& what, double t, int cell, int component)
        : Error(what), time(t), cell(cell), component(component) {}
    double time;
    int cell;
    int component;
};

// Time step exceeded the stability bound.
struct CFLError : Error {
    using Error::Error;
};

// A characteristic points the wrong way for an imposed boundary condition.
struct BoundaryError : Error {
    BoundaryError(const std::string& what, double t, int cell, int component)
        : Error(what), time(t), cell(cell), component(component) {}
    double time;
    int cell;
    int component;
};

// Stationary flow reached the sonic point where the profile ODE is singular.
struct SonicError : Error {
    using Error::Error;
};

// All wave speeds vanished; no stable time step exists.
struct DegenerateError : Error {
    using Error::Error;
};

}  // namespace blendflow
