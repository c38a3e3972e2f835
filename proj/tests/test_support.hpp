#pragma once

#include <random>
#include <vector>

#include "blendflow/mixture.hpp"

namespace blendflow::testing {

inline MixtureState random_state(int n, int cells, std::uint64_t seed,
                                 double rho_lo = 0.3, double rho_hi = 3.0,
                                 double v_lo = -2.0, double v_hi = 2.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> rho_dist(rho_lo, rho_hi);
    std::uniform_real_distribution<double> v_dist(v_lo, v_hi);
    MixtureState s;
    s.grid = {1.0, cells};
    for (int i = 0; i < n; ++i) {
        s.laws.push_back(i % 2 == 0
                             ? PressureLaw::isothermal_ideal(1.0 + 0.25 * i)
                             : PressureLaw::isentropic(1.0 + 0.1 * i, 1.4));
        std::vector<double> rho(cells), v(cells);
        for (int k = 0; k < cells; ++k) {
            rho[k] = rho_dist(rng);
            v[k] = v_dist(rng);
        }
        s.rho.push_back(std::move(rho));
        s.v.push_back(std::move(v));
    }
    return s;
}

inline MixtureState uniform_state(const std::vector<double>& rho,
                                  const std::vector<double>& v,
                                  const std::vector<PressureLaw>& laws,
                                  const Grid& grid) {
    MixtureState s;
    s.grid = grid;
    s.laws = laws;
    for (std::size_t i = 0; i < laws.size(); ++i) {
        s.rho.emplace_back(grid.cells, rho[i]);
        s.v.emplace_back(grid.cells, v[i]);
    }
    return s;
}

}  // namespace blendflow::testing
