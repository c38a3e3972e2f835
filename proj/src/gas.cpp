#include "blendflow/gas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "blendflow/errors.hpp"

namespace blendflow {

PressureLaw PressureLaw::isothermal_ideal(double sound_speed) {
    if (!(sound_speed > 0.0)) {
        throw DomainError("isothermal law: sound speed must be positive");
    }
    PressureLaw law;
    law.kind_ = LawKind::IsothermalIdeal;
    law.a_ = sound_speed;
    return law;
}

PressureLaw PressureLaw::isentropic(double coeff, double gamma) {
    if (!(coeff > 0.0)) {
        throw DomainError("isentropic law: coefficient must be positive");
    }
    if (!(gamma > 1.0)) {
        throw DomainError("isentropic law: exponent must exceed 1");
    }
    PressureLaw law;
    law.kind_ = LawKind::Isentropic;
    law.a_ = coeff;
    law.gamma_ = gamma;
    return law;
}

PressureLaw PressureLaw::tabulated(std::vector<double> rho,
                                   std::vector<double> p) {
    if (rho.size() < 2 || rho.size() != p.size()) {
        throw DomainError("tabulated law: need matching (rho, p) samples");
    }
    for (std::size_t j = 0; j + 1 < rho.size(); ++j) {
        if (!(rho[j] > 0.0) || !(rho[j + 1] > rho[j]) || !(p[j + 1] > p[j])) {
            throw DomainError(
                "tabulated law: samples must be positive and strictly "
                "increasing in both rho and p");
        }
    }
    PressureLaw law;
    law.kind_ = LawKind::Tabulated;
    law.table_ = std::make_shared<numerics::MonotoneCubic>(rho, p);
    law.table_rho_ = std::move(rho);
    law.table_p_ = std::move(p);
    law.anchor_ = (law.table_rho_.front() <= 1.0 && law.table_rho_.back() >= 1.0)
                      ? 1.0
                      : law.table_rho_.front();
    // The interpolant preserves monotonicity but p' > 0 must hold strictly.
    const double lo = law.table_rho_.front();
    const double hi = law.table_rho_.back();
    for (int k = 0; k <= 200; ++k) {
        const double r = lo + (hi - lo) * k / 200.0;
        if (!(law.table_->derivative(r) > 0.0)) {
            throw DomainError("tabulated law: interpolant derivative not "
                              "strictly positive at rho=" + std::to_string(r));
        }
    }
    return law;
}

std::pair<double, double> PressureLaw::density_range() const {
    if (kind_ == LawKind::Tabulated) {
        return {table_rho_.front(), table_rho_.back()};
    }
    return {0.0, std::numeric_limits<double>::infinity()};
}

void PressureLaw::check_density(double rho) const {
    if (!(rho > 0.0)) {
        throw DomainError("pressure law: density must be positive");
    }
    if (kind_ == LawKind::Tabulated &&
        (rho < table_rho_.front() || rho > table_rho_.back())) {
        throw DomainError("tabulated law: density outside the sample range");
    }
}

double PressureLaw::pressure(double rho) const {
    check_density(rho);
    switch (kind_) {
        case LawKind::IsothermalIdeal:
            return a_ * a_ * rho;
        case LawKind::Isentropic:
            return a_ * std::pow(rho, gamma_);
        case LawKind::Tabulated:
            return (*table_)(rho);
    }
    return 0.0;
}

double PressureLaw::pressure_derivative(double rho) const {
    check_density(rho);
    switch (kind_) {
        case LawKind::IsothermalIdeal:
            return a_ * a_;
        case LawKind::Isentropic:
            return a_ * gamma_ * std::pow(rho, gamma_ - 1.0);
        case LawKind::Tabulated:
            return table_->derivative(rho);
    }
    return 0.0;
}

double PressureLaw::potential_second(double rho) const {
    return pressure_derivative(rho) / rho;
}

double PressureLaw::potential(double rho) const {
    check_density(rho);
    switch (kind_) {
        case LawKind::IsothermalIdeal:
            return a_ * a_ * (rho * std::log(rho) - rho + 1.0);
        case LawKind::Isentropic:
            return a_ *
                   (std::pow(rho, gamma_) - gamma_ * rho + gamma_ - 1.0) /
                   (gamma_ - 1.0);
        case LawKind::Tabulated: {
            // Taylor-remainder form of the double primitive of P'' with
            // P(anchor) = P'(anchor) = 0, so a single quadrature suffices.
            const auto f = [this, rho](double s) {
                return (rho - s) * potential_second(s);
            };
            return numerics::integrate(f, anchor_, rho, kQuadTol);
        }
    }
    return 0.0;
}

double PressureLaw::riemann_R(double rho) const {
    check_density(rho);
    if (kind_ == LawKind::IsothermalIdeal) {
        return a_ * std::log(rho);
    }
    const auto f = [this](double r) {
        return std::sqrt(pressure_derivative(r)) / r;
    };
    return numerics::integrate(f, anchor_, rho, kQuadTol);
}

double PressureLaw::riemann_R_inverse(double xi) const {
    if (kind_ == LawKind::IsothermalIdeal) {
        return std::exp(xi / a_);
    }
    const auto f = [this, xi](double rho) { return riemann_R(rho) - xi; };
    const auto df = [this](double rho) {
        return std::sqrt(pressure_derivative(rho)) / rho;
    };
    double lo = anchor_;
    double hi = anchor_;
    if (kind_ == LawKind::Tabulated) {
        lo = table_rho_.front();
        hi = table_rho_.back();
        if (xi < riemann_R(lo) - kRootTol || xi > riemann_R(hi) + kRootTol) {
            throw RangeError("riemann_R_inverse: coordinate outside the "
                             "tabulated range");
        }
        lo = std::max(lo, kDensityFloor);
    } else {
        // Expand a bracket around the anchor; the coordinate has a finite
        // vacuum limit for gamma > 1 which bounds admissible xi from below.
        while (f(hi) < 0.0) {
            hi *= 2.0;
            if (hi > 1e15) {
                throw RangeError("riemann_R_inverse: coordinate above range");
            }
        }
        while (f(lo) > 0.0) {
            lo *= 0.5;
            if (lo < kDensityFloor) {
                throw RangeError(
                    "riemann_R_inverse: coordinate below the vacuum limit");
            }
        }
    }
    return numerics::find_root(f, df, lo, hi, 1e-15, 0.1 * kRootTol);
}

std::pair<double, double> component_to_riemann(const PressureLaw& law,
                                               const ComponentState& s) {
    const double r = law.riemann_R(s.rho);
    return {r + s.v, r - s.v};
}

ComponentState riemann_to_component(const PressureLaw& law, double r_plus,
                                    double r_minus) {
    const double rho = law.riemann_R_inverse(0.5 * (r_plus + r_minus));
    return {rho, 0.5 * (r_plus - r_minus)};
}

std::pair<double, double> eigenvalues(const PressureLaw& law,
                                      const ComponentState& s) {
    const double c = std::sqrt(law.pressure_derivative(s.rho));
    return {s.v + c, s.v - c};
}

}  // namespace blendflow
