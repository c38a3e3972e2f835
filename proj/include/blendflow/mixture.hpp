#pragma once

#include <vector>

#include "blendflow/gas.hpp"

namespace blendflow {

/// Uniform cell-centered grid on [0, length]: x_k = (k + 1/2) dx.
struct Grid {
    double length = 1.0;
    int cells = 0;

    double dx() const { return length / cells; }
    double x(int k) const { return (k + 0.5) * dx(); }

    bool operator==(const Grid&) const = default;
};

struct PhysicsParams {
    double theta = 0.0;      // friction ratio lambda_fric / D, per length
    double omega_bar = 1.0;  // velocity-coupling rate, per time

    bool operator==(const PhysicsParams&) const = default;
};

/// Grid-sampled densities and velocities of all components at one instant.
struct MixtureState {
    Grid grid;
    std::vector<PressureLaw> laws;
    std::vector<std::vector<double>> rho;  // [component][cell]
    std::vector<std::vector<double>> v;    // [component][cell]

    int components() const { return static_cast<int>(laws.size()); }
    int cells() const { return grid.cells; }
    /// Throws DomainError/ConfigError on shape mismatch or rho <= 0.
    void validate() const;
};

/// Density-weighted mean velocity at cell k.
double barycentric_velocity(const MixtureState& s, int k);

/// u^i = v^i - barycentric v; the weighted sum rho^i u^i vanishes exactly
/// up to rounding.
std::vector<double> deviations(const MixtureState& s, int k);

/// Momentum-exchange terms omega_bar * rho^i * u^i; they sum to zero.
std::vector<double> coupling_terms(const MixtureState& s,
                                   const PhysicsParams& p, int k);

/// Source of the diagonal system per component,
///     (theta/8) |R+ - R-| (R+ - R-) + omega_bar u^i,
/// which equals the velocity-equation source (theta/2) v|v| + omega_bar u.
/// The diagonal source vector is (-vartheta_1, +vartheta_1, ...).
std::vector<double> source_vartheta(const MixtureState& s,
                                    const PhysicsParams& p, int k);

/// The 2n diagonal variables on the grid, interconvertible with MixtureState.
struct RiemannField {
    Grid grid;
    std::vector<PressureLaw> laws;
    std::vector<std::vector<double>> r_plus;   // [component][cell]
    std::vector<std::vector<double>> r_minus;  // [component][cell]

    int components() const { return static_cast<int>(laws.size()); }

    static RiemannField from_state(const MixtureState& s);
    MixtureState to_state() const;
};

}  // namespace blendflow
