#include <doctest.h>

#include <cmath>

#include "blendflow/errors.hpp"
#include "blendflow/mixture.hpp"
#include "test_support.hpp"

using namespace blendflow;
using blendflow::testing::random_state;
using blendflow::testing::uniform_state;

namespace {

const Grid kGrid{1.0, 4};

MixtureState two_component(double rho1, double rho2, double v1, double v2) {
    return uniform_state({rho1, rho2}, {v1, v2},
                         {PressureLaw::isothermal_ideal(1.0),
                          PressureLaw::isothermal_ideal(1.0)},
                         kGrid);
}

}  // namespace

TEST_CASE("barycentric velocity") {
    CHECK(barycentric_velocity(two_component(1, 1, 2, 4), 0) ==
          doctest::Approx(3.0));
    CHECK(barycentric_velocity(two_component(3, 1, 0, 4), 0) ==
          doctest::Approx(1.0));
    const auto single = uniform_state(
        {2.5}, {5.0}, {PressureLaw::isothermal_ideal(1.0)}, kGrid);
    CHECK(barycentric_velocity(single, 0) == doctest::Approx(5.0));
}

TEST_CASE("velocity deviations") {
    const auto u = deviations(two_component(1, 1, 2, 4), 0);
    CHECK(u[0] == doctest::Approx(-1.0));
    CHECK(u[1] == doctest::Approx(1.0));

    const auto equal = deviations(two_component(1, 3, 2, 2), 1);
    CHECK(equal[0] == doctest::Approx(0.0));
    CHECK(equal[1] == doctest::Approx(0.0));

    const auto three = uniform_state({1, 2, 1}, {1, 2, 3},
                                     {PressureLaw::isothermal_ideal(1.0),
                                      PressureLaw::isothermal_ideal(1.0),
                                      PressureLaw::isothermal_ideal(1.0)},
                                     kGrid);
    CHECK(barycentric_velocity(three, 0) == doctest::Approx(2.0));
    const auto u3 = deviations(three, 0);
    CHECK(u3[0] == doctest::Approx(-1.0));
    CHECK(u3[1] == doctest::Approx(0.0));
    CHECK(u3[2] == doctest::Approx(1.0));
    CHECK(1.0 * u3[0] + 2.0 * u3[1] + 1.0 * u3[2] ==
          doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("coupling terms") {
    const PhysicsParams p2{0.0, 2.0};
    const auto g = coupling_terms(two_component(1, 1, 1, 3), p2, 0);
    CHECK(g[0] == doctest::Approx(-2.0));
    CHECK(g[1] == doctest::Approx(2.0));

    const auto zero = coupling_terms(two_component(1, 4, 2, 2), p2, 2);
    CHECK(zero[0] == doctest::Approx(0.0));
    CHECK(zero[1] == doctest::Approx(0.0));

    const auto three = uniform_state({1, 2, 1}, {1, 2, 3},
                                     {PressureLaw::isothermal_ideal(1.0),
                                      PressureLaw::isothermal_ideal(1.0),
                                      PressureLaw::isothermal_ideal(1.0)},
                                     kGrid);
    const auto g3 = coupling_terms(three, {0.0, 5.0}, 0);
    CHECK(g3[0] == doctest::Approx(-5.0));
    CHECK(g3[1] == doctest::Approx(0.0));
    CHECK(g3[2] == doctest::Approx(5.0));
}

TEST_CASE("diagonal source terms") {
    // quiescent flow: both friction and coupling vanish
    const auto rest = two_component(1, 2, 0, 0);
    for (double t : source_vartheta(rest, {3.0, 7.0}, 0)) {
        CHECK(t == 0.0);
    }

    // friction off: pure coupling with unit rate
    const auto v = source_vartheta(two_component(1, 1, 1, 3), {0.0, 1.0}, 0);
    CHECK(v[0] == doctest::Approx(-1.0));
    CHECK(v[1] == doctest::Approx(1.0));

    // coupling off: friction of a single component at v = 1
    const auto single = uniform_state(
        {1.0}, {1.0}, {PressureLaw::isothermal_ideal(1.0)}, kGrid);
    const auto f = source_vartheta(single, {8.0, 1e-12}, 0);
    CHECK(f[0] == doctest::Approx(4.0));
}

TEST_CASE("friction source agrees between its two algebraic forms") {
    // (theta/8)|R+ - R-|(R+ - R-) against (theta/2) v |v|
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto s = random_state(3, 6, 900 + seed);
        const PhysicsParams p{0.7, 1e-13};
        for (int k = 0; k < s.cells(); ++k) {
            const auto theta_form = source_vartheta(s, {0.7, 1e-300}, k);
            for (int i = 0; i < s.components(); ++i) {
                const double vi = s.v[i][k];
                const double direct = 0.5 * 0.7 * std::abs(vi) * vi;
                CHECK(std::abs(theta_form[i] - direct) <=
                      1e-12 * (1.0 + std::abs(direct)));
            }
        }
    }
}

TEST_CASE("weighted identities on random admissible states") {
    for (int n : {1, 2, 3, 5}) {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const auto s = random_state(n, 8, 1000 * n + seed);
            for (int k = 0; k < s.cells(); ++k) {
                const auto u = deviations(s, k);
                const auto g = coupling_terms(s, {0.2, 3.0}, k);
                double sum_ru = 0.0, scale_ru = 0.0, sum_g = 0.0,
                       scale_g = 0.0;
                for (int i = 0; i < n; ++i) {
                    sum_ru += s.rho[i][k] * u[i];
                    scale_ru += s.rho[i][k] * std::abs(u[i]);
                    sum_g += g[i];
                    scale_g += std::abs(g[i]);
                }
                CHECK(std::abs(sum_ru) <= 1e-12 * scale_ru + 1e-300);
                CHECK(std::abs(sum_g) <= 1e-12 * scale_g + 1e-300);

                // kinetic decomposition and its projection identity
                const double vbar = barycentric_velocity(s, k);
                double lhs = 0.0, rho_total = 0.0, dev_sq = 0.0, mixed = 0.0;
                for (int i = 0; i < n; ++i) {
                    lhs += s.rho[i][k] * s.v[i][k] * s.v[i][k];
                    rho_total += s.rho[i][k];
                    dev_sq += s.rho[i][k] * u[i] * u[i];
                    mixed += s.rho[i][k] * s.v[i][k] * u[i];
                }
                const double rhs = rho_total * vbar * vbar + dev_sq;
                CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs) + 1e-300);
                CHECK(std::abs(mixed - dev_sq) <=
                      1e-12 * (std::abs(mixed) + dev_sq) + 1e-13);
            }
        }
    }
}

TEST_CASE("riemann field round trip") {
    const auto s = random_state(3, 16, 42, 0.4, 2.5, -1.5, 1.5);
    const auto field = RiemannField::from_state(s);
    const auto back = field.to_state();
    for (int i = 0; i < s.components(); ++i) {
        for (int k = 0; k < s.cells(); ++k) {
            CHECK(std::abs(back.rho[i][k] - s.rho[i][k]) <=
                  1e-10 * (1.0 + s.rho[i][k]));
            CHECK(std::abs(back.v[i][k] - s.v[i][k]) <= 1e-12);
        }
    }
}

TEST_CASE("state validation") {
    auto s = two_component(1, 1, 0, 0);
    s.rho[0][2] = -1.0;
    CHECK_THROWS_AS(s.validate(), DomainError);
    s.rho[0][2] = 1.0;
    s.v[1].pop_back();
    CHECK_THROWS_AS(s.validate(), ConfigError);
}
