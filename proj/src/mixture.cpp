#include "blendflow/mixture.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "blendflow/errors.hpp"

namespace blendflow {

void MixtureState::validate() const {
    if (laws.empty()) {
        throw ConfigError("mixture state: at least one component required");
    }
    if (grid.cells < 1) {
        throw ConfigError("mixture state: empty grid");
    }
    if (rho.size() != laws.size() || v.size() != laws.size()) {
        throw ConfigError("mixture state: field count does not match laws");
    }
    for (std::size_t i = 0; i < laws.size(); ++i) {
        if (static_cast<int>(rho[i].size()) != grid.cells ||
            static_cast<int>(v[i].size()) != grid.cells) {
            throw ConfigError("mixture state: field length does not match grid");
        }
        for (int k = 0; k < grid.cells; ++k) {
            if (!(rho[i][k] > 0.0)) {
                throw DomainError("mixture state: non-positive density at cell " +
                                  std::to_string(k));
            }
        }
    }
}

double barycentric_velocity(const MixtureState& s, int k) {
    if (s.components() == 1) {
        return s.v[0][k];  // keeps u = 0 exact for a single component
    }
    double momentum = 0.0;
    double total = 0.0;
    for (int i = 0; i < s.components(); ++i) {
        momentum += s.rho[i][k] * s.v[i][k];
        total += s.rho[i][k];
    }
    return momentum / total;
}

std::vector<double> deviations(const MixtureState& s, int k) {
    const double vbar = barycentric_velocity(s, k);
    std::vector<double> u(s.components());
    for (int i = 0; i < s.components(); ++i) {
        u[i] = s.v[i][k] - vbar;
    }
    return u;
}

std::vector<double> coupling_terms(const MixtureState& s,
                                   const PhysicsParams& p, int k) {
    auto g = deviations(s, k);
    for (int i = 0; i < s.components(); ++i) {
        g[i] *= p.omega_bar * s.rho[i][k];
    }
    return g;
}

std::vector<double> source_vartheta(const MixtureState& s,
                                    const PhysicsParams& p, int k) {
    auto out = deviations(s, k);
    for (int i = 0; i < s.components(); ++i) {
        // (theta/8)|dR|dR with dR = R+ - R- = 2 v^i
        const double dr = 2.0 * s.v[i][k];
        out[i] = 0.125 * p.theta * std::abs(dr) * dr + p.omega_bar * out[i];
    }
    return out;
}

RiemannField RiemannField::from_state(const MixtureState& s) {
    RiemannField f;
    f.grid = s.grid;
    f.laws = s.laws;
    const int n = s.components();
    f.r_plus.assign(n, std::vector<double>(s.grid.cells));
    f.r_minus.assign(n, std::vector<double>(s.grid.cells));
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < s.grid.cells; ++k) {
            const auto [rp, rm] =
                component_to_riemann(s.laws[i], {s.rho[i][k], s.v[i][k]});
            f.r_plus[i][k] = rp;
            f.r_minus[i][k] = rm;
        }
    }
    return f;
}

MixtureState RiemannField::to_state() const {
    MixtureState s;
    s.grid = grid;
    s.laws = laws;
    const int n = components();
    s.rho.assign(n, std::vector<double>(grid.cells));
    s.v.assign(n, std::vector<double>(grid.cells));
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < grid.cells; ++k) {
            const auto c =
                riemann_to_component(laws[i], r_plus[i][k], r_minus[i][k]);
            s.rho[i][k] = c.rho;
            s.v[i][k] = c.v;
        }
    }
    return s;
}

}  // namespace blendflow
