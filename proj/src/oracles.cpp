#include "blendflow/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "blendflow/errors.hpp"
#include "blendflow/numerics.hpp"

namespace blendflow {

double example1_velocity(double P0, double theta, double t) {
    return 1.0 / (P0 + 0.5 * theta * t);
}

MixtureState example1_state(const std::vector<double>& rho0,
                            const std::vector<PressureLaw>& laws, double P0,
                            double theta, double t, const Grid& grid) {
    if (!(P0 > 0.0)) {
        throw DomainError("example1: P0 must be positive");
    }
    if (rho0.size() != laws.size() || rho0.empty()) {
        throw ConfigError("example1: one density per pressure law required");
    }
    MixtureState s;
    s.grid = grid;
    s.laws = laws;
    const double v = example1_velocity(P0, theta, t);
    for (std::size_t i = 0; i < rho0.size(); ++i) {
        if (!(rho0[i] > 0.0)) {
            throw DomainError("example1: densities must be positive");
        }
        s.rho.push_back(std::vector<double>(grid.cells, rho0[i]));
        s.v.push_back(std::vector<double>(grid.cells, v));
    }
    return s;
}

BoundaryConditions example1_boundary(const std::vector<double>& rho0, double P0,
                                     double theta) {
    BoundaryConditions bc;
    bc.vbar = TimeSignal::custom(
        [P0, theta](double t) { return example1_velocity(P0, theta, t); },
        [P0, theta](double t) {
            const double d = P0 + 0.5 * theta * t;
            return -0.5 * theta / (d * d);
        });
    for (double r : rho0) {
        bc.rhobar.push_back(TimeSignal::constant(r));
    }
    return bc;
}

double TravelingWaveSpec::exponent_rate(int i) const {
    const double a = sound_speeds[i];
    return lambda * lambda * theta / (2.0 * a * a);
}

double TravelingWaveSpec::density(int i, double t, double x) const {
    return amplitudes[i] * std::exp(exponent_rate(i) * (lambda * t - x));
}

std::vector<PressureLaw> TravelingWaveSpec::laws() const {
    std::vector<PressureLaw> out;
    for (double a : sound_speeds) {
        out.push_back(PressureLaw::isothermal_ideal(a));
    }
    return out;
}

void TravelingWaveSpec::validate() const {
    if (amplitudes.empty() || amplitudes.size() != sound_speeds.size()) {
        throw ConfigError("traveling wave: amplitudes and sound speeds must "
                          "match");
    }
    if (!(lambda > 0.0)) {
        throw DomainError("traveling wave: wave speed must be positive");
    }
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
        if (!(amplitudes[i] > 0.0) || !(sound_speeds[i] > 0.0)) {
            throw DomainError("traveling wave: parameters must be positive");
        }
    }
}

MixtureState example2_state(const TravelingWaveSpec& spec, double t,
                            const Grid& grid) {
    spec.validate();
    MixtureState s;
    s.grid = grid;
    s.laws = spec.laws();
    for (int i = 0; i < spec.components(); ++i) {
        std::vector<double> rho(grid.cells), v(grid.cells, spec.lambda);
        for (int k = 0; k < grid.cells; ++k) {
            rho[k] = spec.density(i, t, grid.x(k));
        }
        s.rho.push_back(std::move(rho));
        s.v.push_back(std::move(v));
    }
    return s;
}

BoundaryConditions example2_boundary(const TravelingWaveSpec& spec,
                                     double length) {
    spec.validate();
    BoundaryConditions bc;
    bc.vbar = TimeSignal::constant(spec.lambda);
    for (int i = 0; i < spec.components(); ++i) {
        const double kappa = spec.exponent_rate(i);
        const double c = spec.amplitudes[i];
        const double lambda = spec.lambda;
        bc.rhobar.push_back(TimeSignal::custom(
            [=](double t) {
                return c * std::exp(kappa * (lambda * t - length));
            },
            [=](double t) {
                return c * kappa * lambda *
                       std::exp(kappa * (lambda * t - length));
            }));
    }
    return bc;
}

void StationarySpec::validate() const {
    if (laws.empty() || flow_rates.size() != laws.size() ||
        rho_inlet.size() != laws.size()) {
        throw ConfigError("stationary spec: sizes must match");
    }
    for (std::size_t i = 0; i < laws.size(); ++i) {
        if (!(rho_inlet[i] > 0.0)) {
            throw DomainError("stationary spec: inlet densities must be "
                              "positive");
        }
    }
    // Common inlet velocity across components.
    const double v0 = flow_rates[0] / rho_inlet[0];
    for (std::size_t i = 1; i < laws.size(); ++i) {
        if (std::abs(flow_rates[i] / rho_inlet[i] - v0) >
            1e-9 * (1.0 + std::abs(v0))) {
            throw ConfigError("stationary spec: inlet velocities differ "
                              "between components");
        }
    }
}

MixtureState stationary_profile(const StationarySpec& spec, const Grid& grid) {
    spec.validate();
    const int n = static_cast<int>(spec.laws.size());

    const auto rhs = [&spec, n](double /*x*/, const std::vector<double>& rho,
                                std::vector<double>& drho) {
        double momentum = 0.0, total = 0.0;
        for (int i = 0; i < n; ++i) {
            momentum += spec.flow_rates[i];
            total += rho[i];
        }
        const double vbar = momentum / total;
        for (int i = 0; i < n; ++i) {
            const double q = spec.flow_rates[i];
            const double vi = q / rho[i];
            const double sonic =
                spec.laws[i].pressure_derivative(rho[i]) - vi * vi;
            if (!(sonic > 0.0)) {
                throw SonicError("stationary profile: sonic point reached "
                                 "(p' - v^2 <= 0)");
            }
            const double force = -0.5 * spec.params.theta * q * std::abs(q) /
                                     rho[i] -
                                 spec.params.omega_bar * (q - vbar * rho[i]);
            drho[i] = force / sonic;
        }
    };

    std::vector<double> xs;
    xs.reserve(grid.cells + 1);
    xs.push_back(0.0);
    for (int k = 0; k < grid.cells; ++k) xs.push_back(grid.x(k));

    const auto profile = numerics::ode45_at(rhs, xs, spec.rho_inlet);

    MixtureState s;
    s.grid = grid;
    s.laws = spec.laws;
    s.rho.assign(n, std::vector<double>(grid.cells));
    s.v.assign(n, std::vector<double>(grid.cells));
    for (int k = 0; k < grid.cells; ++k) {
        for (int i = 0; i < n; ++i) {
            const double rho = profile[k + 1][i];
            if (!(rho > kDensityFloor)) {
                throw SonicError("stationary profile: density collapsed");
            }
            s.rho[i][k] = rho;
            s.v[i][k] = spec.flow_rates[i] / rho;
        }
    }
    return s;
}

namespace {

std::vector<double> outlet_density(const StationarySpec& spec,
                                   const Grid& grid) {
    // Only the value at x = L is needed, integrated to the boundary point.
    const auto state = stationary_profile(spec, grid);
    std::vector<double> out(spec.laws.size());
    const int K = grid.cells;
    for (std::size_t i = 0; i < spec.laws.size(); ++i) {
        out[i] = K >= 2 ? 1.5 * state.rho[i][K - 1] - 0.5 * state.rho[i][K - 2]
                        : state.rho[i][K - 1];
    }
    return out;
}

}  // namespace

StationarySpec stationary_shooting(const std::vector<double>& rho_outlet,
                                   double vbar_inlet, const PhysicsParams& p,
                                   const std::vector<PressureLaw>& laws,
                                   const Grid& grid, double tol, int max_iter) {
    const int n = static_cast<int>(laws.size());
    if (static_cast<int>(rho_outlet.size()) != n || n == 0) {
        throw ConfigError("shooting: one outlet density per component");
    }
    if (!(vbar_inlet > 0.0)) {
        throw ConfigError("shooting: inlet velocity must be positive");
    }

    StationarySpec spec;
    spec.params = p;
    spec.laws = laws;
    spec.flow_rates.resize(n);
    spec.rho_inlet.resize(n);
    const auto apply_q = [&spec, vbar_inlet, n](const std::vector<double>& q) {
        for (int i = 0; i < n; ++i) {
            spec.flow_rates[i] = q[i];
            spec.rho_inlet[i] = q[i] / vbar_inlet;
        }
    };

    std::vector<double> q(n);
    for (int i = 0; i < n; ++i) q[i] = rho_outlet[i] * vbar_inlet;

    std::vector<double> residual(n), jac(n * n), trial(n), perturbed(n);
    for (int it = 0; it < max_iter; ++it) {
        apply_q(q);
        const auto rho_L = outlet_density(spec, grid);
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            residual[i] = rho_L[i] - rho_outlet[i];
            worst = std::max(worst, std::abs(residual[i]));
        }
        if (worst <= tol) {
            return spec;
        }
        // Finite-difference Jacobian d rho_L / d q.
        for (int j = 0; j < n; ++j) {
            const double h = 1e-7 * (1.0 + std::abs(q[j]));
            trial = q;
            trial[j] += h;
            apply_q(trial);
            const auto rho_h = outlet_density(spec, grid);
            for (int i = 0; i < n; ++i) {
                jac[i * n + j] = (rho_h[i] - rho_L[i]) / h;
            }
        }
        // Solve jac * dq = residual by Gaussian elimination with pivoting.
        std::vector<double> a = jac, b = residual;
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int col = 0; col < n; ++col) {
            int pivot = col;
            for (int r = col + 1; r < n; ++r) {
                if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) {
                    pivot = r;
                }
            }
            if (std::abs(a[pivot * n + col]) < 1e-14) {
                throw NonconvergenceError("shooting: singular Jacobian");
            }
            if (pivot != col) {
                for (int c = 0; c < n; ++c) std::swap(a[col * n + c], a[pivot * n + c]);
                std::swap(b[col], b[pivot]);
            }
            for (int r = col + 1; r < n; ++r) {
                const double m = a[r * n + col] / a[col * n + col];
                for (int c = col; c < n; ++c) a[r * n + c] -= m * a[col * n + c];
                b[r] -= m * b[col];
            }
        }
        std::vector<double> dq(n);
        for (int r = n - 1; r >= 0; --r) {
            double acc = b[r];
            for (int c = r + 1; c < n; ++c) acc -= a[r * n + c] * dq[c];
            dq[r] = acc / a[r * n + r];
        }
        // Damped update keeping all flow rates positive.
        double damping = 1.0;
        for (int i = 0; i < n; ++i) {
            while (q[i] - damping * dq[i] <= 0.0 && damping > 1e-6) {
                damping *= 0.5;
            }
        }
        for (int i = 0; i < n; ++i) q[i] -= damping * dq[i];
    }
    throw NonconvergenceError("shooting: outlet densities not matched within "
                              "the iteration cap");
}

}  // namespace blendflow
