#pragma once

#include <vector>

#include "blendflow/diagnostics.hpp"
#include "blendflow/mixture.hpp"
#include "blendflow/solver.hpp"

namespace blendflow {

/// Reduced (n+1)-field model: per-component densities sharing one velocity.
struct DriftFluxState {
    Grid grid;
    std::vector<PressureLaw> laws;
    std::vector<std::vector<double>> rho;  // [component][cell]
    std::vector<double> v;                 // [cell]

    int components() const { return static_cast<int>(laws.size()); }
    int cells() const { return grid.cells; }
    void validate() const;

    /// Densities kept, velocity replaced by the density-weighted mean.
    static DriftFluxState from_mixture(const MixtureState& s);
};

double driftflux_cfl_dt(const DriftFluxState& s, const Discretization& d);

/// One explicit first-order characteristic-upwind update of the reduced
/// system
///   rho^i_t + (rho^i v)_x = 0,
///   v_t + v v_x + sum_i (rho^i/rho) P_i'' d_x rho^i = -(theta/2) v |v|,
/// with v imposed at x = 0 and the densities at x = L.
DriftFluxState driftflux_step(const DriftFluxState& s,
                              const BoundaryConditions& bc,
                              const PhysicsParams& p, const Discretization& d,
                              double t, double dt);

/// Advances the reduced model to t_end with CFL-limited steps.
DriftFluxState run_driftflux(const DriftFluxState& initial,
                             const BoundaryConditions& bc,
                             const PhysicsParams& p, const Discretization& d);

/// L2-in-x distance of the per-component (density, momentum) fields.
double field_distance(const MixtureState& full, const DriftFluxState& reduced);

/// Restriction to a grid of half the cells by pairwise averaging.
MixtureState coarsen(const MixtureState& s);
DriftFluxState coarsen(const DriftFluxState& s);

struct ComparisonReport {
    std::vector<double> times;
    std::vector<double> lyap_full;
    std::vector<double> field_distance;  // full vs reduced at matched times
    double S0 = 0.0;
    BoundsReport bounds;
    MixtureState full_final;
    DriftFluxState reduced_final;
};

/// Runs the full model and the reduced model from the same densities (the
/// reduced velocity is the barycentric mean of the full initial velocities)
/// and reports the synchronization error, the threshold S0 and the field
/// distance on a shared time grid. Reporting only; nothing is asserted.
ComparisonReport compare_models(const MixtureState& full_initial,
                                const BoundaryConditions& bc,
                                const PhysicsParams& p, const Discretization& d,
                                int output_points = 40);

}  // namespace blendflow
