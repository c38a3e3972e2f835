#pragma once

#include <vector>

#include "blendflow/mixture.hpp"
#include "blendflow/solver.hpp"

namespace blendflow {

/// x-uniform decaying flow: rho^i constant, every velocity equal to
/// 1/(P0 + theta t / 2). Valid for any pressure law.
double example1_velocity(double P0, double theta, double t);
MixtureState example1_state(const std::vector<double>& rho0,
                            const std::vector<PressureLaw>& laws, double P0,
                            double theta, double t, const Grid& grid);
/// Matching boundary signals (common inflow velocity, constant outflow
/// densities).
BoundaryConditions example1_boundary(const std::vector<double>& rho0, double P0,
                                     double theta);

/// Traveling-wave family for ideal isothermal components:
/// rho^i(t, x) = C_i exp(kappa_i (lambda t - x)) with
/// kappa_i = lambda^2 theta / (2 a_i^2) and every velocity equal to lambda.
struct TravelingWaveSpec {
    double lambda = 1.0;                 // wave speed > 0
    std::vector<double> amplitudes;      // C_i > 0
    std::vector<double> sound_speeds;    // a_i of the isothermal laws
    double theta = 0.0;

    int components() const { return static_cast<int>(amplitudes.size()); }
    double exponent_rate(int i) const;   // kappa_i
    double density(int i, double t, double x) const;
    std::vector<PressureLaw> laws() const;
    void validate() const;
};

MixtureState example2_state(const TravelingWaveSpec& spec, double t,
                            const Grid& grid);
BoundaryConditions example2_boundary(const TravelingWaveSpec& spec,
                                     double length);

/// Stationary profile data: constant per-component flow rates with a common
/// inlet velocity, so rho^i(0) = q^i / vbar.
struct StationarySpec {
    std::vector<double> flow_rates;   // q^i, constant along the pipe
    std::vector<double> rho_inlet;    // q^i / vbar
    PhysicsParams params;
    std::vector<PressureLaw> laws;

    void validate() const;
};

/// Integrates the coupled profile ODEs
///   (p^i + q_i^2 / rho^i)_x = -(theta/2) q_i |q_i| / rho^i
///                             - omega_bar (q_i - vbar rho^i)
/// from the inlet with an adaptive 4(5) stepper and returns the profile
/// sampled at the cell centers (velocities v^i = q^i / rho^i).
/// Throws SonicError where p'(rho) - v^2 vanishes.
MixtureState stationary_profile(const StationarySpec& spec, const Grid& grid);

/// Finds flow rates whose stationary profile hits the prescribed outlet
/// densities, keeping the common inlet velocity fixed (damped Newton with a
/// finite-difference Jacobian on the flow rates).
StationarySpec stationary_shooting(const std::vector<double>& rho_outlet,
                                   double vbar_inlet, const PhysicsParams& p,
                                   const std::vector<PressureLaw>& laws,
                                   const Grid& grid, double tol = 1e-10,
                                   int max_iter = 60);

}  // namespace blendflow
