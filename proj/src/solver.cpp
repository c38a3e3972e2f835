#include "blendflow/solver.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "blendflow/errors.hpp"
#include "blendflow/numerics.hpp"

namespace blendflow {

namespace {

constexpr double kStiffCouplingThreshold = 0.5;
constexpr double kBoundarySignTol = 1e-9;
constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

TimeSignal TimeSignal::constant(double value) {
    TimeSignal s;
    s.kind_ = SignalKind::Constant;
    s.params_ = {value};
    s.f_ = [value](double) { return value; };
    s.df_ = [](double) { return 0.0; };
    return s;
}

TimeSignal TimeSignal::ramp(double start, double rate) {
    TimeSignal s;
    s.kind_ = SignalKind::Ramp;
    s.params_ = {start, rate};
    s.f_ = [start, rate](double t) { return start + rate * t; };
    s.df_ = [rate](double) { return rate; };
    return s;
}

TimeSignal TimeSignal::sinusoid(double mean, double amplitude, double frequency,
                                double phase) {
    TimeSignal s;
    s.kind_ = SignalKind::Sinusoid;
    s.params_ = {mean, amplitude, frequency, phase};
    const double omega = kTwoPi * frequency;
    s.f_ = [=](double t) { return mean + amplitude * std::sin(omega * t + phase); };
    s.df_ = [=](double t) { return amplitude * omega * std::cos(omega * t + phase); };
    return s;
}

TimeSignal TimeSignal::table(std::vector<double> t, std::vector<double> value) {
    if (t.size() < 2 || t.size() != value.size()) {
        throw ConfigError("signal table: need matching (t, value) samples");
    }
    for (std::size_t j = 0; j + 1 < t.size(); ++j) {
        if (!(t[j + 1] > t[j])) {
            throw ConfigError("signal table: times must strictly increase");
        }
    }
    TimeSignal s;
    s.kind_ = SignalKind::Table;
    s.params_.reserve(2 * t.size());
    s.params_.insert(s.params_.end(), t.begin(), t.end());
    s.params_.insert(s.params_.end(), value.begin(), value.end());
    auto ts = std::make_shared<std::vector<double>>(std::move(t));
    auto vs = std::make_shared<std::vector<double>>(std::move(value));
    const auto segment = [ts](double x) {
        auto it = std::upper_bound(ts->begin(), ts->end(), x);
        long j = (it - ts->begin()) - 1;
        j = std::clamp(j, 0L, static_cast<long>(ts->size()) - 2);
        return static_cast<std::size_t>(j);
    };
    s.f_ = [ts, vs, segment](double x) {
        if (x <= ts->front()) return vs->front();
        if (x >= ts->back()) return vs->back();
        const auto j = segment(x);
        const double w = (x - (*ts)[j]) / ((*ts)[j + 1] - (*ts)[j]);
        return (1.0 - w) * (*vs)[j] + w * (*vs)[j + 1];
    };
    s.df_ = [ts, vs, segment](double x) {
        if (x < ts->front() || x > ts->back()) return 0.0;
        const auto j = segment(x);
        return ((*vs)[j + 1] - (*vs)[j]) / ((*ts)[j + 1] - (*ts)[j]);
    };
    return s;
}

TimeSignal TimeSignal::custom(std::function<double(double)> f,
                              std::function<double(double)> df) {
    TimeSignal s;
    s.kind_ = SignalKind::Custom;
    s.f_ = std::move(f);
    s.df_ = std::move(df);
    return s;
}

double CompatibilityReport::max_residual() const {
    double m = 0.0;
    for (const auto* vec :
         {&velocity_value, &density_value, &density_rate, &velocity_rate}) {
        for (double r : *vec) m = std::max(m, std::abs(r));
    }
    return m;
}

CompatibilityReport check_c1_compatibility(const MixtureState& s0,
                                           const BoundaryConditions& bc,
                                           const PhysicsParams& p,
                                           double tolerance) {
    s0.validate();
    const int n = s0.components();
    const int K = s0.cells();
    if (static_cast<int>(bc.rhobar.size()) != n) {
        throw ConfigError("boundary conditions: one outflow density per "
                          "component required");
    }
    const double dx = s0.grid.dx();
    CompatibilityReport rep;
    rep.tolerance = tolerance;

    const auto edge0 = [K](const std::vector<double>& f) {
        return K >= 2 ? 1.5 * f[0] - 0.5 * f[1] : f[0];
    };
    const auto edgeL = [K](const std::vector<double>& f) {
        return K >= 2 ? 1.5 * f[K - 1] - 0.5 * f[K - 2] : f[K - 1];
    };

    const double vbar0 = bc.vbar(0.0);
    const double vbar0_t = bc.vbar.derivative(0.0);
    const double v_mean0 = barycentric_velocity(s0, 0);

    for (int i = 0; i < n; ++i) {
        rep.velocity_value.push_back(edge0(s0.v[i]) - vbar0);
        rep.density_value.push_back(edgeL(s0.rho[i]) - bc.rhobar[i](0.0));

        std::vector<double> flux(K);
        for (int k = 0; k < K; ++k) flux[k] = s0.v[i][k] * s0.rho[i][k];
        const auto flux_x = numerics::gradient(flux, dx);
        rep.density_rate.push_back(bc.rhobar[i].derivative(0.0) +
                                   flux_x[K - 1]);

        const auto v_x = numerics::gradient(s0.v[i], dx);
        const auto rho_x = numerics::gradient(s0.rho[i], dx);
        const double vi = s0.v[i][0];
        const double head_x =
            vi * v_x[0] + s0.laws[i].potential_second(s0.rho[i][0]) * rho_x[0];
        const double source = 0.5 * p.theta * vi * std::abs(vi) +
                              p.omega_bar * (vi - v_mean0);
        rep.velocity_rate.push_back(vbar0_t + head_x + source);
    }
    rep.pass = rep.max_residual() <= tolerance;
    return rep;
}

double cfl_dt(const MixtureState& s, const Discretization& d) {
    s.validate();
    double speed = 0.0;
    for (int i = 0; i < s.components(); ++i) {
        for (int k = 0; k < s.cells(); ++k) {
            const auto [lp, lm] = eigenvalues(s.laws[i], {s.rho[i][k], s.v[i][k]});
            speed = std::max({speed, std::abs(lp), std::abs(lm)});
        }
    }
    if (!(speed > 0.0)) {
        throw DegenerateError("cfl_dt: all wave speeds vanish");
    }
    return d.cfl * s.grid.dx() / speed;
}

namespace {

struct SolverState {
    RiemannField field;
    MixtureState phys;  // reconstruction of field, kept in sync
};

// One explicit update of the diagonal variables; phys must match field at
// time t and is left matching the updated field.
void advance(SolverState& st, const BoundaryConditions& bc,
             const PhysicsParams& p, double t, double dt) {
    RiemannField& f = st.field;
    const MixtureState& s = st.phys;
    const int n = f.components();
    const int K = f.grid.cells;
    const double dx = f.grid.dx();
    const bool stiff = p.omega_bar * dt > kStiffCouplingThreshold;

    std::vector<double> vbar(K);
    for (int k = 0; k < K; ++k) vbar[k] = barycentric_velocity(s, k);

    const double vbar_t = bc.vbar(t);

    static thread_local std::vector<std::vector<double>> np, nm;
    np.assign(n, std::vector<double>(K));
    nm.assign(n, std::vector<double>(K));

    for (int i = 0; i < n; ++i) {
        const auto& rp = f.r_plus[i];
        const auto& rm = f.r_minus[i];

        // Subsonic layout required where conditions are imposed: the +
        // characteristic enters at x = 0 and the - characteristic at x = L.
        for (int k : {0, K - 1}) {
            const auto [lp, lm] =
                eigenvalues(s.laws[i], {s.rho[i][k], s.v[i][k]});
            const double tol = kBoundarySignTol * (1.0 + std::abs(lp - lm));
            if (lp < -tol || lm > tol) {
                throw BoundaryError(
                    "boundary characteristic points the wrong way "
                    "(transonic or reversed flow) at t=" + std::to_string(t),
                    t, k, i);
            }
        }

        // Boundary closure: outgoing invariants extrapolated linearly to the
        // boundary point, incoming invariants imposed there, ghosts mirrored
        // so the cell/ghost midpoint reproduces the boundary value.
        const double rm_b0 = K >= 2 ? 1.5 * rm[0] - 0.5 * rm[1] : rm[0];
        const double rp_b0 = rm_b0 + 2.0 * vbar_t;
        const double ghost0_p = 2.0 * rp_b0 - rp[0];
        const double ghost0_m = 2.0 * rm_b0 - rm[0];

        const double rp_bL = K >= 2 ? 1.5 * rp[K - 1] - 0.5 * rp[K - 2] : rp[K - 1];
        const double rho_out = bc.rhobar[i](t);
        if (!(rho_out > 0.0)) {
            throw ConfigError("outflow density signal must stay positive");
        }
        const double rm_bL = -rp_bL + 2.0 * s.laws[i].riemann_R(rho_out);
        const double ghostL_p = 2.0 * rp_bL - rp[K - 1];
        const double ghostL_m = 2.0 * rm_bL - rm[K - 1];

        for (int k = 0; k < K; ++k) {
            const auto [lp, lm] =
                eigenvalues(s.laws[i], {s.rho[i][k], s.v[i][k]});
            const double left_p = k > 0 ? rp[k - 1] : ghost0_p;
            const double left_m = k > 0 ? rm[k - 1] : ghost0_m;
            const double right_p = k < K - 1 ? rp[k + 1] : ghostL_p;
            const double right_m = k < K - 1 ? rm[k + 1] : ghostL_m;

            const double adv_p = lp > 0.0   ? lp * (rp[k] - left_p) / dx
                                 : lp < 0.0 ? lp * (right_p - rp[k]) / dx
                                            : 0.0;
            const double adv_m = lm > 0.0   ? lm * (rm[k] - left_m) / dx
                                 : lm < 0.0 ? lm * (right_m - rm[k]) / dx
                                            : 0.0;

            const double dr = rp[k] - rm[k];  // = 2 v^i
            double src = 0.125 * p.theta * std::abs(dr) * dr;
            if (!stiff) {
                src += p.omega_bar * (s.v[i][k] - vbar[k]);
            }
            np[i][k] = rp[k] - dt * adv_p - dt * src;
            nm[i][k] = rm[k] - dt * adv_m + dt * src;
        }
    }

    if (stiff) {
        // Split relaxation step: the coupling leaves the densities and the
        // barycentric velocity invariant, so u^i contracts by exp(-omega dt)
        // exactly. (R+ + R-)/2 is untouched; only the difference moves.
        const double contraction = std::exp(-p.omega_bar * dt);
        std::vector<double> rho_star(n), v_star(n);
        for (int k = 0; k < K; ++k) {
            double momentum = 0.0, total = 0.0;
            for (int i = 0; i < n; ++i) {
                const double mid = 0.5 * (np[i][k] + nm[i][k]);
                double rho;
                try {
                    rho = f.laws[i].riemann_R_inverse(mid);
                } catch (const RangeError&) {
                    throw VacuumError("density left the admissible range "
                                      "during relaxation",
                                      t, k, i);
                }
                rho_star[i] = rho;
                v_star[i] = 0.5 * (np[i][k] - nm[i][k]);
                momentum += rho * v_star[i];
                total += rho;
            }
            const double vb = momentum / total;
            for (int i = 0; i < n; ++i) {
                const double v_new = vb + (v_star[i] - vb) * contraction;
                const double mid = 0.5 * (np[i][k] + nm[i][k]);
                np[i][k] = mid + v_new;
                nm[i][k] = mid - v_new;
            }
        }
    }

    f.r_plus = np;
    f.r_minus = nm;

    // Reconstruct the physical fields and enforce the vacuum floor.
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < K; ++k) {
            double rho;
            try {
                rho = f.laws[i].riemann_R_inverse(
                    0.5 * (f.r_plus[i][k] + f.r_minus[i][k]));
            } catch (const RangeError&) {
                throw VacuumError("density left the admissible range", t, k, i);
            }
            if (!(rho > kDensityFloor)) {
                throw VacuumError("density reached the vacuum floor", t, k, i);
            }
            st.phys.rho[i][k] = rho;
            st.phys.v[i][k] = 0.5 * (f.r_plus[i][k] - f.r_minus[i][k]);
        }
    }
}

}  // namespace

MixtureState step(const MixtureState& s, const BoundaryConditions& bc,
                  const PhysicsParams& p, const Discretization& d, double t,
                  double dt) {
    s.validate();
    if (static_cast<int>(bc.rhobar.size()) != s.components()) {
        throw ConfigError("boundary conditions: one outflow density per "
                          "component required");
    }
    const double bound = cfl_dt(s, d);
    if (dt > bound * (1.0 + 1e-12)) {
        throw CFLError("step: dt=" + std::to_string(dt) +
                       " exceeds the stability bound " + std::to_string(bound));
    }
    SolverState st{RiemannField::from_state(s), s};
    advance(st, bc, p, t, dt);
    return st.phys;
}

struct StateStepper::Impl {
    SolverState st;
    BoundaryConditions bc;
    PhysicsParams p;
    Discretization d;
};

StateStepper::StateStepper(const MixtureState& initial, BoundaryConditions bc,
                           PhysicsParams p, Discretization d) {
    initial.validate();
    impl_ = std::make_shared<Impl>(
        Impl{SolverState{RiemannField::from_state(initial), initial},
             std::move(bc), p, d});
}

void StateStepper::advance_to(double target) {
    while (t_ < target) {
        double dt = cfl_dt(impl_->st.phys, impl_->d);
        bool lands = false;
        if (t_ + dt >= target) {
            dt = target - t_;
            lands = true;
        }
        advance(impl_->st, impl_->bc, impl_->p, t_, dt);
        t_ = lands ? target : t_ + dt;
        ++steps_;
    }
}

const MixtureState& StateStepper::state() const { return impl_->st.phys; }

Trajectory run(const MixtureState& initial, const BoundaryConditions& bc,
               const PhysicsParams& p, const Discretization& d,
               const std::vector<double>& snapshot_times) {
    initial.validate();
    if (d.cells != initial.cells()) {
        throw ConfigError("run: discretization cell count does not match the "
                          "initial state");
    }
    if (!(d.cfl > 0.0 && d.cfl <= 1.0)) {
        throw ConfigError("run: CFL number must lie in (0, 1]");
    }
    if (!(d.t_end >= 0.0)) {
        throw ConfigError("run: negative horizon");
    }

    Trajectory traj;
    traj.compatibility = check_c1_compatibility(
        initial, bc, p, std::max(1e-6, 5.0 * initial.grid.dx()));

    std::vector<double> snaps = snapshot_times;
    std::sort(snaps.begin(), snaps.end());
    snaps.erase(std::unique(snaps.begin(), snaps.end()), snaps.end());

    SolverState st{RiemannField::from_state(initial), initial};
    double t = 0.0;
    traj.frames.push_back(make_frame(st.phys, p, t));
    for (double ts : snaps) {
        if (ts <= 0.0) traj.snapshots.emplace_back(0.0, st.phys);
    }

    std::size_t next_snap = 0;
    while (next_snap < snaps.size() && snaps[next_snap] <= 0.0) ++next_snap;

    const int stride = std::max(1, d.output_stride);
    while (t < d.t_end) {
        double target = d.t_end;
        if (next_snap < snaps.size() && snaps[next_snap] < target) {
            target = snaps[next_snap];
        }
        double dt = cfl_dt(st.phys, d);
        bool lands = false;
        if (t + dt >= target) {
            dt = target - t;
            lands = true;
        }
        advance(st, bc, p, t, dt);
        t = lands ? target : t + dt;
        ++traj.steps;

        if (lands && next_snap < snaps.size() && target == snaps[next_snap]) {
            traj.snapshots.emplace_back(t, st.phys);
            ++next_snap;
        }
        if (traj.steps % stride == 0 || t >= d.t_end) {
            traj.frames.push_back(make_frame(st.phys, p, t));
        }
    }
    traj.final_state = st.phys;
    return traj;
}

}  // namespace blendflow
