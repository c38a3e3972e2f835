#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blendflow/driftflux.hpp"
#include "blendflow/mixture.hpp"
#include "blendflow/solver.hpp"

namespace blendflow {

struct LawSpec {
    std::string kind = "isothermal_ideal";  // isothermal_ideal | isentropic | tabulated
    double sound_speed = 1.0;               // isothermal_ideal
    double coeff = 1.0;                     // isentropic
    double gamma = 1.4;                     // isentropic
    std::vector<double> table_rho, table_p; // tabulated

    PressureLaw make() const;
    bool operator==(const LawSpec&) const = default;
};

struct SignalSpec {
    std::string kind = "constant";  // constant | ramp | sinusoid | table
    double value = 0.0;
    double start = 0.0, rate = 0.0;
    double mean = 0.0, amplitude = 0.0, frequency = 0.0, phase = 0.0;
    std::vector<double> t, values;

    TimeSignal make() const;
    bool operator==(const SignalSpec&) const = default;
};

struct InitialSpec {
    std::string family = "uniform";  // uniform | example1 | example2 | tabulated
    std::vector<double> density;     // uniform constants / example1 rho0
    std::vector<double> velocity;    // uniform constants
    double p0 = 1.0;                 // example1
    double lambda = 1.0;             // example2
    std::vector<double> amplitudes;  // example2
    std::vector<double> x;           // tabulated profile abscissae
    std::vector<std::vector<double>> density_profiles;   // tabulated
    std::vector<std::vector<double>> velocity_profiles;  // tabulated
    double perturbation = 0.0;  // seeded uniform velocity noise amplitude
    std::uint64_t seed = 0;

    bool operator==(const InitialSpec&) const = default;
};

/// Everything needed to reproduce a run; round-trips through TOML exactly.
struct Scenario {
    PhysicsParams physics;
    double length = 1.0;
    Discretization disc;
    std::vector<LawSpec> components;
    InitialSpec initial;
    SignalSpec inflow_velocity;
    std::vector<SignalSpec> outflow_density;
    std::vector<double> snapshot_times;
    std::vector<double> stationary_flow_rates;  // empty: derived from inlet
    bool stationary_match_outlet = false;

    std::vector<PressureLaw> laws() const;
    MixtureState initial_state() const;
    BoundaryConditions boundary() const;
    void validate() const;

    bool operator==(const Scenario&) const = default;
};

Scenario parse_scenario(const std::string& toml_text);
Scenario load_scenario(const std::string& path);
std::string serialize_scenario(const Scenario& sc);

Trajectory run(const Scenario& sc);
ComparisonReport compare_models(const Scenario& sc, double omega_bar);

}  // namespace blendflow
