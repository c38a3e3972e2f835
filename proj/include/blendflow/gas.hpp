#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "blendflow/numerics.hpp"

namespace blendflow {

/// Densities below this are treated as vacuum and rejected, never clamped.
inline constexpr double kDensityFloor = 1e-9;
/// Absolute tolerance of the characteristic-coordinate quadrature.
inline constexpr double kQuadTol = 1e-12;
/// Tolerance of the inverse characteristic coordinate (in coordinate units).
inline constexpr double kRootTol = 1e-12;

enum class LawKind { IsothermalIdeal, Isentropic, Tabulated };

/// Barotropic pressure law p(rho), strictly increasing on its admissible
/// density range. Provides the pressure potential P with rho P'' = p' and the
/// characteristic coordinate
///     R(rho) = integral from the anchor to rho of sqrt(p'(r))/r dr,
/// which is closed-form for the ideal isothermal law and evaluated by
/// adaptive quadrature otherwise. The anchor is 1 unless a tabulated range
/// excludes it, in which case the lower end of the table is used.
class PressureLaw {
  public:
    /// p = a^2 rho with sound speed a > 0.
    static PressureLaw isothermal_ideal(double sound_speed);
    /// p = a rho^gamma with a > 0, gamma > 1.
    static PressureLaw isentropic(double coeff, double gamma);
    /// Monotone cubic interpolant of sampled (rho, p) pairs.
    static PressureLaw tabulated(std::vector<double> rho, std::vector<double> p);

    LawKind kind() const { return kind_; }
    double sound_speed() const { return a_; }
    double exponent() const { return gamma_; }
    const std::vector<double>& table_rho() const { return table_rho_; }
    const std::vector<double>& table_p() const { return table_p_; }

    double pressure(double rho) const;
    double pressure_derivative(double rho) const;
    /// P''(rho) = p'(rho) / rho.
    double potential_second(double rho) const;
    /// Pressure potential normalized so P(anchor) = P'(anchor) = 0.
    double potential(double rho) const;

    double riemann_R(double rho) const;
    double riemann_R_inverse(double xi) const;

    double anchor() const { return anchor_; }
    /// Admissible density interval (open at zero for analytic laws).
    std::pair<double, double> density_range() const;

    bool operator==(const PressureLaw&) const = default;

  private:
    PressureLaw() = default;
    void check_density(double rho) const;

    LawKind kind_ = LawKind::IsothermalIdeal;
    double a_ = 1.0;
    double gamma_ = 1.0;
    double anchor_ = 1.0;
    std::vector<double> table_rho_, table_p_;
    std::shared_ptr<const numerics::MonotoneCubic> table_;
};

struct ComponentState {
    double rho;
    double v;
};

/// (R+, R-) = (R(rho) + v, R(rho) - v).
std::pair<double, double> component_to_riemann(const PressureLaw& law,
                                               const ComponentState& s);

/// Exact inverse: v = (R+ - R-)/2, rho = R^{-1}((R+ + R-)/2).
ComponentState riemann_to_component(const PressureLaw& law, double r_plus,
                                    double r_minus);

/// Characteristic speeds (v + sqrt(p'), v - sqrt(p')).
std::pair<double, double> eigenvalues(const PressureLaw& law,
                                      const ComponentState& s);

}  // namespace blendflow
