"""Multicomponent isothermal pipeline flow with velocity-coupling terms.

The heavy lifting lives in the C++ extension ``blendflow._core``; this
package re-exports its public surface.
"""

from ._core import (  # noqa: F401
    BoundsReport,
    CertReport,
    CompatibilityReport,
    ComparisonReport,
    ConfigError,
    DiagnosticsFrame,
    Discretization,
    DomainError,
    Grid,
    MixtureState,
    PhysicsParams,
    PressureLaw,
    RangeError,
    Scenario,
    Trajectory,
    barycentric_velocity,
    boundary_terms,
    certify_envelope,
    cmd_certify,
    cmd_run,
    compare_scenario,
    component_to_riemann,
    coupling_terms,
    deviations,
    eigenvalues,
    energy_identity_check,
    example1_velocity,
    integral_I,
    load_scenario,
    lyapunov,
    ode_remark_solution,
    parse_scenario,
    riemann_to_component,
    run_scenario,
    running_bounds,
    source_vartheta,
)

__version__ = "0.1.0"
