#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "blendflow/diagnostics.hpp"
#include "blendflow/mixture.hpp"

namespace blendflow {

enum class SignalKind { Constant, Ramp, Sinusoid, Table, Custom };

/// Continuously differentiable scalar signal of time, used for boundary data.
class TimeSignal {
  public:
    TimeSignal() : TimeSignal(constant(0.0)) {}

    static TimeSignal constant(double value);
    static TimeSignal ramp(double start, double rate);
    static TimeSignal sinusoid(double mean, double amplitude, double frequency,
                               double phase = 0.0);
    /// Piecewise-linear interpolation of (t, value) samples; constant
    /// extension outside the sampled interval.
    static TimeSignal table(std::vector<double> t, std::vector<double> value);
    /// Analytic signal with caller-supplied derivative (not serializable).
    static TimeSignal custom(std::function<double(double)> f,
                             std::function<double(double)> df);

    double operator()(double t) const { return f_(t); }
    double derivative(double t) const { return df_(t); }
    SignalKind kind() const { return kind_; }
    const std::vector<double>& params() const { return params_; }

  private:
    SignalKind kind_ = SignalKind::Constant;
    std::vector<double> params_;
    std::function<double(double)> f_, df_;
};

/// Common inflow velocity at x = 0 and per-component outflow densities at
/// x = L.
struct BoundaryConditions {
    TimeSignal vbar;
    std::vector<TimeSignal> rhobar;
};

struct Discretization {
    int cells = 128;
    double cfl = 0.9;        // in (0, 1]
    double t_end = 1.0;
    int output_stride = 1;   // steps between diagnostic frames

    bool operator==(const Discretization&) const = default;
};

/// Residuals of the order-0 and order-1 matching conditions between initial
/// and boundary data. Report-only; all entries are per component.
struct CompatibilityReport {
    std::vector<double> velocity_value;  // v^i(0, 0) - vbar(0)
    std::vector<double> density_value;   // rho^i(0, L) - rhobar^i(0)
    std::vector<double> density_rate;    // rhobar^i'(0) + d_x(v^i rho^i)|_L
    std::vector<double> velocity_rate;   // vbar'(0) + flux + friction/coupling
    double tolerance = 0.0;
    bool pass = false;
    double max_residual() const;
};

CompatibilityReport check_c1_compatibility(const MixtureState& s0,
                                           const BoundaryConditions& bc,
                                           const PhysicsParams& p,
                                           double tolerance = 1e-6);

/// Largest stable explicit step: cfl * dx / max |lambda|.
double cfl_dt(const MixtureState& s, const Discretization& d);

/// One explicit characteristic-upwind update of the diagonal system.
/// Incoming invariants are imposed from the boundary signals at the boundary
/// points; outgoing invariants are linearly extrapolated. The velocity
/// coupling switches to an exact per-cell relaxation once omega_bar * dt
/// exceeds 1/2.
MixtureState step(const MixtureState& s, const BoundaryConditions& bc,
                  const PhysicsParams& p, const Discretization& d, double t,
                  double dt);

/// Owns the diagonal-variable state across steps so the initial data are
/// transformed exactly once per run.
class StateStepper {
  public:
    StateStepper(const MixtureState& initial, BoundaryConditions bc,
                 PhysicsParams p, Discretization d);

    /// CFL-limited steps until the target time, last step truncated.
    void advance_to(double target);
    double time() const { return t_; }
    const MixtureState& state() const;
    long steps() const { return steps_; }

  private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
    double t_ = 0.0;
    long steps_ = 0;
};

struct Trajectory {
    std::vector<DiagnosticsFrame> frames;
    std::vector<std::pair<double, MixtureState>> snapshots;
    MixtureState final_state;
    CompatibilityReport compatibility;
    long steps = 0;
};

/// Integrates from t = 0 to t_end with adaptive CFL-limited steps (the last
/// step is truncated to land on t_end exactly). Emits a frame every
/// output_stride steps and at t_end; snapshots are taken exactly at the
/// requested times. A failed compatibility check only flags the report.
Trajectory run(const MixtureState& initial, const BoundaryConditions& bc,
               const PhysicsParams& p, const Discretization& d,
               const std::vector<double>& snapshot_times = {});

}  // namespace blendflow
