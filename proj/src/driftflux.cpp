#include "blendflow/driftflux.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "blendflow/errors.hpp"

namespace blendflow {

void DriftFluxState::validate() const {
    if (laws.empty() || rho.size() != laws.size()) {
        throw ConfigError("drift-flux state: field count mismatch");
    }
    if (static_cast<int>(v.size()) != grid.cells) {
        throw ConfigError("drift-flux state: velocity length mismatch");
    }
    for (const auto& field : rho) {
        if (static_cast<int>(field.size()) != grid.cells) {
            throw ConfigError("drift-flux state: density length mismatch");
        }
        for (double r : field) {
            if (!(r > 0.0)) {
                throw DomainError("drift-flux state: non-positive density");
            }
        }
    }
}

DriftFluxState DriftFluxState::from_mixture(const MixtureState& s) {
    DriftFluxState d;
    d.grid = s.grid;
    d.laws = s.laws;
    d.rho = s.rho;
    d.v.resize(s.cells());
    for (int k = 0; k < s.cells(); ++k) {
        d.v[k] = barycentric_velocity(s, k);
    }
    return d;
}

namespace {

// Mixture sound speed of the reduced system: c^2 = sum_i (rho^i/rho) p_i'.
double mixture_sound_sq(const DriftFluxState& s, int k) {
    double total = 0.0, acc = 0.0;
    for (int i = 0; i < s.components(); ++i) {
        total += s.rho[i][k];
    }
    for (int i = 0; i < s.components(); ++i) {
        acc += s.rho[i][k] / total * s.laws[i].pressure_derivative(s.rho[i][k]);
    }
    return acc;
}

}  // namespace

double driftflux_cfl_dt(const DriftFluxState& s, const Discretization& d) {
    s.validate();
    double speed = 0.0;
    for (int k = 0; k < s.cells(); ++k) {
        speed = std::max(speed,
                         std::abs(s.v[k]) + std::sqrt(mixture_sound_sq(s, k)));
    }
    if (!(speed > 0.0)) {
        throw DegenerateError("driftflux_cfl_dt: all wave speeds vanish");
    }
    return d.cfl * s.grid.dx() / speed;
}

DriftFluxState driftflux_step(const DriftFluxState& s,
                              const BoundaryConditions& bc,
                              const PhysicsParams& p, const Discretization& d,
                              double t, double dt) {
    s.validate();
    const int n = s.components();
    const int K = s.cells();
    if (static_cast<int>(bc.rhobar.size()) != n) {
        throw ConfigError("drift-flux step: one outflow density per component");
    }
    const double bound = driftflux_cfl_dt(s, d);
    if (dt > bound * (1.0 + 1e-12)) {
        throw CFLError("drift-flux step: dt exceeds the stability bound");
    }
    const double dx = s.grid.dx();

    // Ghost layers: velocity imposed at the inlet point, densities at the
    // outlet point, outgoing fields linearly extrapolated.
    std::vector<double> ghost0_rho(n), ghostL_rho(n);
    const double ghost0_v = 2.0 * bc.vbar(t) - s.v[0];
    const double ghostL_v = K >= 2 ? 2.0 * s.v[K - 1] - s.v[K - 2] : s.v[K - 1];
    for (int i = 0; i < n; ++i) {
        const double lin =
            K >= 2 ? 2.0 * s.rho[i][0] - s.rho[i][1] : s.rho[i][0];
        ghost0_rho[i] = lin > kDensityFloor ? lin : s.rho[i][0];
        const double out = bc.rhobar[i](t);
        if (!(out > 0.0)) {
            throw ConfigError("outflow density signal must stay positive");
        }
        ghostL_rho[i] = 2.0 * out - s.rho[i][K - 1];
        if (!(ghostL_rho[i] > kDensityFloor)) {
            ghostL_rho[i] = out;
        }
    }

    DriftFluxState next = s;
    std::vector<double> w(n), dl(n + 1), dr(n + 1), flux(n + 1);

    for (int k = 0; k < K; ++k) {
        const double vk = s.v[k];
        double total = 0.0;
        for (int i = 0; i < n; ++i) total += s.rho[i][k];
        const double c2 = mixture_sound_sq(s, k);
        const double c = std::sqrt(c2);

        // Transonic boundary layout check mirrors the full solver.
        if (k == 0 || k == K - 1) {
            const double tol = 1e-9 * (1.0 + c);
            if ((k == 0 && vk + c < -tol) || (k == K - 1 && vk - c > tol)) {
                throw BoundaryError("drift-flux boundary characteristic "
                                    "points the wrong way at t=" +
                                        std::to_string(t),
                                    t, k, -1);
            }
        }

        for (int i = 0; i < n; ++i) {
            w[i] = s.rho[i][k] / total *
                   s.laws[i].potential_second(s.rho[i][k]);
            const double left = k > 0 ? s.rho[i][k - 1] : ghost0_rho[i];
            const double right = k < K - 1 ? s.rho[i][k + 1] : ghostL_rho[i];
            dl[i] = s.rho[i][k] - left;
            dr[i] = right - s.rho[i][k];
        }
        dl[n] = vk - (k > 0 ? s.v[k - 1] : ghost0_v);
        dr[n] = (k < K - 1 ? s.v[k + 1] : ghostL_v) - vk;

        // Characteristic-upwind flux: A+ dl + A- dr with
        // A = v I + B, A+- = (A +- |A|)/2, evaluated matrix-free via the
        // spectral projectors of the rank-two acoustic block B.
        const auto apply = [&](const std::vector<double>& z, double weight,
                               double sign) {
            // contribution of (A + sign |A|)/2 applied to z, scaled by weight
            double wd = 0.0;
            for (int i = 0; i < n; ++i) wd += w[i] * z[i];
            const double zv = z[n];
            const double sp = wd / c + zv;   // + acoustic strength (x2)
            const double sm = zv - wd / c;   // - acoustic strength (x2)
            // A z
            for (int i = 0; i < n; ++i) {
                flux[i] += weight * 0.5 * (vk * z[i] + s.rho[i][k] * zv);
            }
            flux[n] += weight * 0.5 * (vk * zv + wd);
            // |A| z = |v| P0 z + |v+c| P+ z + |v-c| P- z
            const double ap = std::abs(vk + c);
            const double am = std::abs(vk - c);
            const double a0 = std::abs(vk);
            for (int i = 0; i < n; ++i) {
                const double contact = z[i] - wd / c2 * s.rho[i][k];
                const double acoustic =
                    (ap * sp - am * sm) / (2.0 * c) * s.rho[i][k];
                flux[i] += weight * sign * 0.5 * (a0 * contact + acoustic);
            }
            flux[n] += weight * sign * 0.5 * (ap * sp + am * sm) / 2.0;
        };

        std::fill(flux.begin(), flux.end(), 0.0);
        apply(dl, 1.0, +1.0);  // A+ (U_k - U_{k-1})
        apply(dr, 1.0, -1.0);  // A- (U_{k+1} - U_k)

        for (int i = 0; i < n; ++i) {
            next.rho[i][k] = s.rho[i][k] - dt / dx * flux[i];
            if (!(next.rho[i][k] > kDensityFloor)) {
                throw VacuumError("drift-flux density reached the vacuum floor",
                                  t, k, i);
            }
        }
        next.v[k] = vk - dt / dx * flux[n] -
                    dt * 0.5 * p.theta * vk * std::abs(vk);
    }
    return next;
}

DriftFluxState run_driftflux(const DriftFluxState& initial,
                             const BoundaryConditions& bc,
                             const PhysicsParams& p, const Discretization& d) {
    DriftFluxState s = initial;
    double t = 0.0;
    while (t < d.t_end) {
        double dt = driftflux_cfl_dt(s, d);
        bool lands = false;
        if (t + dt >= d.t_end) {
            dt = d.t_end - t;
            lands = true;
        }
        s = driftflux_step(s, bc, p, d, t, dt);
        t = lands ? d.t_end : t + dt;
    }
    return s;
}

double field_distance(const MixtureState& full, const DriftFluxState& reduced) {
    if (full.cells() != reduced.cells() ||
        full.components() != reduced.components()) {
        throw ConfigError("field_distance: incompatible shapes");
    }
    const double dx = full.grid.dx();
    double acc = 0.0;
    for (int i = 0; i < full.components(); ++i) {
        for (int k = 0; k < full.cells(); ++k) {
            const double drho = full.rho[i][k] - reduced.rho[i][k];
            const double dq =
                full.rho[i][k] * full.v[i][k] - reduced.rho[i][k] * reduced.v[k];
            acc += (drho * drho + dq * dq) * dx;
        }
    }
    return std::sqrt(acc);
}

MixtureState coarsen(const MixtureState& s) {
    if (s.cells() % 2 != 0) {
        throw ConfigError("coarsen: cell count must be even");
    }
    MixtureState c;
    c.grid = {s.grid.length, s.cells() / 2};
    c.laws = s.laws;
    c.rho.assign(s.components(), std::vector<double>(c.grid.cells));
    c.v.assign(s.components(), std::vector<double>(c.grid.cells));
    for (int i = 0; i < s.components(); ++i) {
        for (int k = 0; k < c.grid.cells; ++k) {
            c.rho[i][k] = 0.5 * (s.rho[i][2 * k] + s.rho[i][2 * k + 1]);
            c.v[i][k] = 0.5 * (s.v[i][2 * k] + s.v[i][2 * k + 1]);
        }
    }
    return c;
}

DriftFluxState coarsen(const DriftFluxState& s) {
    if (s.cells() % 2 != 0) {
        throw ConfigError("coarsen: cell count must be even");
    }
    DriftFluxState c;
    c.grid = {s.grid.length, s.cells() / 2};
    c.laws = s.laws;
    c.rho.assign(s.components(), std::vector<double>(c.grid.cells));
    c.v.assign(c.grid.cells, 0.0);
    for (int i = 0; i < s.components(); ++i) {
        for (int k = 0; k < c.grid.cells; ++k) {
            c.rho[i][k] = 0.5 * (s.rho[i][2 * k] + s.rho[i][2 * k + 1]);
        }
    }
    for (int k = 0; k < c.grid.cells; ++k) {
        c.v[k] = 0.5 * (s.v[2 * k] + s.v[2 * k + 1]);
    }
    return c;
}

ComparisonReport compare_models(const MixtureState& full_initial,
                                const BoundaryConditions& bc,
                                const PhysicsParams& p, const Discretization& d,
                                int output_points) {
    full_initial.validate();
    ComparisonReport rep;

    StateStepper full(full_initial, bc, p, d);
    DriftFluxState reduced = DriftFluxState::from_mixture(full_initial);
    std::vector<DiagnosticsFrame> frames;

    const auto record = [&](double now) {
        rep.times.push_back(now);
        rep.lyap_full.push_back(lyapunov(full.state()));
        rep.field_distance.push_back(field_distance(full.state(), reduced));
        frames.push_back(make_frame(full.state(), p, now));
    };
    record(0.0);

    double t = 0.0;
    for (int j = 1; j <= output_points; ++j) {
        const double target = d.t_end * j / output_points;
        full.advance_to(target);
        while (t < target) {
            double dt = driftflux_cfl_dt(reduced, d);
            bool lands = false;
            if (t + dt >= target) {
                dt = target - t;
                lands = true;
            }
            reduced = driftflux_step(reduced, bc, p, d, t, dt);
            t = lands ? target : t + dt;
        }
        t = target;
        record(t);
    }

    rep.bounds = running_bounds(frames, p, full_initial.grid.length);
    rep.S0 = rep.bounds.S0;
    rep.full_final = full.state();
    rep.reduced_final = reduced;
    return rep;
}

}  // namespace blendflow
