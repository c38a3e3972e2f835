#pragma once

#include <optional>
#include <vector>

#include "blendflow/mixture.hpp"

namespace blendflow {

/// Per-time-step record of the synchronization diagnostics.
struct DiagnosticsFrame {
    double t = 0.0;
    double lyapunov = 0.0;      // rho-weighted L2 velocity deviation, >= 0
    double b_hat = 0.0;         // b_l - b_0
    double b_l = 0.0;
    double b_0 = 0.0;
    double integral_i = 0.0;    // pressure-gradient perturbation integral
    double energy_total = 0.0;  // integral of the summed component energies
    double energy_mix = 0.0;    // integral of the mixture energy
    bool sign_uniform = true;   // sign(v^i) independent of i across the grid

    // Frame-wise maxima feeding the running bounds.
    double max_m_term = 0.0;    // (theta/2)|v^i| + |d_x v|
    double max_n_term = 0.0;    // (theta/2)|v|
    double max_eps_sq = 0.0;    // rho^i |P_i'' d_x rho^i|^2

    // Boundary-cell values per component.
    std::vector<double> rho_in, v_in, rho_out, v_out;
};

/// Midpoint-rule quadrature of (1/2) sum_i rho^i (v^i - v)^2.
double lyapunov(const MixtureState& s);

/// | integral of summed energies - mixture energy - lyapunov |; the
/// potential terms cancel exactly so this is pure rounding.
double energy_identity_check(const MixtureState& s);

struct BoundaryTerms {
    double b_hat;
    double b_l;
    double b_0;
};

/// Boundary dissipation terms, evaluated from the boundary cells:
///   b_l = -(1/2) sum_i rho^i v^i (v - v^i)^2 at x = L, b_0 likewise at 0.
BoundaryTerms boundary_terms(const MixtureState& s);

/// I(t) = sum_i integral of (v^i - v) rho^i P_i''(rho^i) d_x rho^i.
double integral_I(const MixtureState& s);

DiagnosticsFrame make_frame(const MixtureState& s, const PhysicsParams& p,
                            double t);

struct BoundsReport {
    double M = 0.0;
    double N = 0.0;
    double eps_hat = 0.0;
    double beta = 0.0;
    double S0 = 0.0;  // eps_hat^2 / (4 beta^2); valid only if beta > 0
    bool beta_positive = false;
    double omega_bar = 0.0;
    double theta = 0.0;
    double length = 0.0;
    long frames_used = 0;
};

/// Maxima of the observed trajectory:
///   M = max (theta/2)|v^i| + |d_x v|,  N = max (theta/2)|v|,
///   eps_hat = sqrt(2 L max rho^i |P_i'' d_x rho^i|^2),
///   beta = omega_bar - M - N,  S0 = eps_hat^2 / (4 beta^2).
BoundsReport running_bounds(const std::vector<DiagnosticsFrame>& frames,
                            const PhysicsParams& p, double length);

struct CertOptions {
    double rel_tol = 0.05;
    double abs_tol = 1e-10;
};

struct CertReport {
    bool pass_i = false;
    double max_excess_i = 0.0;         // worst lyap - allowed envelope
    double first_violation_t_i = -1.0; // -1 when no violation
    bool has_part_ii = false;
    double t_star = 0.0;
    bool hypothesis_bhat_le_i = false; // b_hat(t) <= I(t) on [t_star, T]
    bool hypothesis_i_ge_bl = false;   // I(t) >= b_l(t) on [t_star, T]
    bool pass_ii = false;
    double max_excess_ii = 0.0;
    double first_violation_t_ii = -1.0;
    double beta = 0.0;
    double eps_hat = 0.0;
    CertOptions options;
};

/// Certifies the decay envelope of the Lyapunov series.
/// (i)  lyap(t) <= (eps/(2 beta) + exp(-beta t)(sqrt(lyap(0)) - eps/(2 beta)))^2
///      within tolerance for every frame;
/// (ii) when t_star is given: lyap(t) <= exp(-2 beta (t - t_star)) lyap(t_star)
///      on [t_star, T]; the two hypothesis flags report whether
///      b_hat <= I and I >= b_l actually held there.
/// Throws ConfigError if beta <= 0.
CertReport certify_envelope(const std::vector<DiagnosticsFrame>& frames,
                            double beta, double eps_hat,
                            std::optional<double> t_star = std::nullopt,
                            CertOptions options = {});

/// Closed-form solution y(t) = (alpha^2/(4 beta^2)) (1 + C0 exp(-beta t))^2
/// of y' = alpha sqrt(y) - 2 beta y; requires C0 >= -1 (at C0 = -1 this is
/// the nonuniqueness branch through y(0) = 0).
double ode_remark_solution(double alpha, double beta, double c0, double t);

}  // namespace blendflow
