#include "blendflow/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "blendflow/errors.hpp"
#include "blendflow/numerics.hpp"

namespace blendflow {

double lyapunov(const MixtureState& s) {
    const double dx = s.grid.dx();
    double acc = 0.0;
    for (int k = 0; k < s.cells(); ++k) {
        const double vbar = barycentric_velocity(s, k);
        for (int i = 0; i < s.components(); ++i) {
            const double u = s.v[i][k] - vbar;
            acc += 0.5 * s.rho[i][k] * u * u;
        }
    }
    return acc * dx;
}

namespace {

double energy_density_total(const MixtureState& s, int k) {
    double h = 0.0;
    for (int i = 0; i < s.components(); ++i) {
        h += 0.5 * s.rho[i][k] * s.v[i][k] * s.v[i][k] +
             s.laws[i].potential(s.rho[i][k]);
    }
    return h;
}

double energy_density_mix(const MixtureState& s, int k) {
    const double vbar = barycentric_velocity(s, k);
    double h = 0.0;
    for (int i = 0; i < s.components(); ++i) {
        h += 0.5 * s.rho[i][k] * vbar * vbar + s.laws[i].potential(s.rho[i][k]);
    }
    return h;
}

}  // namespace

double energy_identity_check(const MixtureState& s) {
    const double dx = s.grid.dx();
    double total = 0.0, mix = 0.0;
    for (int k = 0; k < s.cells(); ++k) {
        total += energy_density_total(s, k);
        mix += energy_density_mix(s, k);
    }
    return std::abs(total * dx - mix * dx - lyapunov(s));
}

BoundaryTerms boundary_terms(const MixtureState& s) {
    const auto half_sum = [&s](int k) {
        const double vbar = barycentric_velocity(s, k);
        double acc = 0.0;
        for (int i = 0; i < s.components(); ++i) {
            const double d = vbar - s.v[i][k];
            acc += s.rho[i][k] * s.v[i][k] * d * d;
        }
        return -0.5 * acc;
    };
    BoundaryTerms b;
    b.b_0 = half_sum(0);
    b.b_l = half_sum(s.cells() - 1);
    b.b_hat = b.b_l - b.b_0;
    return b;
}

double integral_I(const MixtureState& s) {
    const double dx = s.grid.dx();
    double acc = 0.0;
    for (int i = 0; i < s.components(); ++i) {
        const auto rho_x = numerics::gradient(s.rho[i], dx);
        for (int k = 0; k < s.cells(); ++k) {
            const double vbar = barycentric_velocity(s, k);
            acc += (s.v[i][k] - vbar) * s.rho[i][k] *
                   s.laws[i].potential_second(s.rho[i][k]) * rho_x[k];
        }
    }
    return acc * dx;
}

DiagnosticsFrame make_frame(const MixtureState& s, const PhysicsParams& p,
                            double t) {
    DiagnosticsFrame f;
    f.t = t;
    f.lyapunov = lyapunov(s);
    const auto b = boundary_terms(s);
    f.b_hat = b.b_hat;
    f.b_l = b.b_l;
    f.b_0 = b.b_0;
    f.integral_i = integral_I(s);

    const double dx = s.grid.dx();
    const int n = s.components();
    const int cells = s.cells();

    double e_total = 0.0, e_mix = 0.0;
    for (int k = 0; k < cells; ++k) {
        e_total += energy_density_total(s, k);
        e_mix += energy_density_mix(s, k);
    }
    f.energy_total = e_total * dx;
    f.energy_mix = e_mix * dx;

    std::vector<double> vbar(cells);
    for (int k = 0; k < cells; ++k) {
        vbar[k] = barycentric_velocity(s, k);
    }
    const auto vbar_x = numerics::gradient(vbar, dx);

    int sign_seen = 0;
    bool uniform = true;
    for (int i = 0; i < n; ++i) {
        const auto rho_x = numerics::gradient(s.rho[i], dx);
        for (int k = 0; k < cells; ++k) {
            const double vi = s.v[i][k];
            f.max_m_term = std::max(
                f.max_m_term, 0.5 * p.theta * std::abs(vi) + std::abs(vbar_x[k]));
            const double grad =
                s.rho[i][k] *
                std::pow(s.laws[i].potential_second(s.rho[i][k]) * rho_x[k], 2);
            f.max_eps_sq = std::max(f.max_eps_sq, grad);
            if (vi != 0.0) {
                const int sg = vi > 0.0 ? 1 : -1;
                if (sign_seen == 0) {
                    sign_seen = sg;
                } else if (sg != sign_seen) {
                    uniform = false;
                }
            }
        }
    }
    for (int k = 0; k < cells; ++k) {
        f.max_n_term = std::max(f.max_n_term, 0.5 * p.theta * std::abs(vbar[k]));
    }
    f.sign_uniform = uniform;

    f.rho_in.resize(n);
    f.v_in.resize(n);
    f.rho_out.resize(n);
    f.v_out.resize(n);
    for (int i = 0; i < n; ++i) {
        f.rho_in[i] = s.rho[i][0];
        f.v_in[i] = s.v[i][0];
        f.rho_out[i] = s.rho[i][cells - 1];
        f.v_out[i] = s.v[i][cells - 1];
    }
    return f;
}

BoundsReport running_bounds(const std::vector<DiagnosticsFrame>& frames,
                            const PhysicsParams& p, double length) {
    BoundsReport r;
    r.omega_bar = p.omega_bar;
    r.theta = p.theta;
    r.length = length;
    r.frames_used = static_cast<long>(frames.size());
    double eps_sq = 0.0;
    for (const auto& f : frames) {
        r.M = std::max(r.M, f.max_m_term);
        r.N = std::max(r.N, f.max_n_term);
        eps_sq = std::max(eps_sq, f.max_eps_sq);
    }
    r.eps_hat = std::sqrt(2.0 * length * eps_sq);
    r.beta = p.omega_bar - r.M - r.N;
    r.beta_positive = r.beta > 0.0;
    r.S0 = r.beta_positive ? r.eps_hat * r.eps_hat / (4.0 * r.beta * r.beta)
                           : 0.0;
    return r;
}

CertReport certify_envelope(const std::vector<DiagnosticsFrame>& frames,
                            double beta, double eps_hat,
                            std::optional<double> t_star, CertOptions options) {
    if (!(beta > 0.0)) {
        throw ConfigError("certify_envelope: decay margin beta must be positive");
    }
    if (frames.empty()) {
        throw ConfigError("certify_envelope: empty series");
    }
    CertReport rep;
    rep.beta = beta;
    rep.eps_hat = eps_hat;
    rep.options = options;

    const double t0 = frames.front().t;
    const double l0 = std::max(frames.front().lyapunov, 0.0);
    const double plateau = eps_hat / (2.0 * beta);

    rep.pass_i = true;
    for (const auto& f : frames) {
        const double decay = std::exp(-beta * (f.t - t0));
        const double root = plateau + decay * (std::sqrt(l0) - plateau);
        const double envelope = root * root;
        const double allowed =
            envelope * (1.0 + options.rel_tol) + options.abs_tol;
        const double excess = f.lyapunov - allowed;
        rep.max_excess_i = std::max(rep.max_excess_i, excess);
        if (excess > 0.0 && rep.pass_i) {
            rep.pass_i = false;
            rep.first_violation_t_i = f.t;
        }
    }

    if (t_star) {
        rep.has_part_ii = true;
        rep.t_star = *t_star;
        rep.pass_ii = true;
        rep.hypothesis_bhat_le_i = true;
        rep.hypothesis_i_ge_bl = true;
        double l_star = -1.0;
        for (const auto& f : frames) {
            if (f.t < *t_star) continue;
            if (l_star < 0.0) l_star = std::max(f.lyapunov, 0.0);
            if (f.b_hat > f.integral_i) rep.hypothesis_bhat_le_i = false;
            if (f.integral_i < f.b_l) rep.hypothesis_i_ge_bl = false;
            const double envelope =
                std::exp(-2.0 * beta * (f.t - *t_star)) * l_star;
            const double allowed =
                envelope * (1.0 + options.rel_tol) + options.abs_tol;
            const double excess = f.lyapunov - allowed;
            rep.max_excess_ii = std::max(rep.max_excess_ii, excess);
            if (excess > 0.0 && rep.pass_ii) {
                rep.pass_ii = false;
                rep.first_violation_t_ii = f.t;
            }
        }
        if (l_star < 0.0) {
            throw ConfigError("certify_envelope: t_star beyond the series");
        }
    }
    return rep;
}

double ode_remark_solution(double alpha, double beta, double c0, double t) {
    if (!(beta > 0.0)) {
        throw DomainError("ode_remark_solution: beta must be positive");
    }
    if (c0 < -1.0) {
        throw DomainError("ode_remark_solution: C0 below -1 leaves the "
                          "solution family");
    }
    const double s = 1.0 + c0 * std::exp(-beta * t);
    const double scale = alpha / (2.0 * beta);
    return scale * scale * s * s;
}

}  // namespace blendflow
