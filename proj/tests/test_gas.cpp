#include <doctest.h>

#include <cmath>
#include <vector>

#include "blendflow/errors.hpp"
#include "blendflow/gas.hpp"

using namespace blendflow;

namespace {

// Independent quadrature oracle: composite Simpson with a fixed fine mesh,
// no adaptivity shared with the implementation.
double simpson_oracle(const PressureLaw& law, double a, double b, int n = 20000) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    auto f = [&law](double r) {
        return std::sqrt(law.pressure_derivative(r)) / r;
    };
    double acc = f(a) + f(b);
    for (int j = 1; j < n; ++j) {
        acc += f(a + j * h) * (j % 2 ? 4.0 : 2.0);
    }
    return acc * h / 3.0;
}

// Independent inversion oracle: plain bisection on the quadrature oracle.
double bisect_inverse_oracle(const PressureLaw& law, double xi, double lo,
                             double hi) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (simpson_oracle(law, 1.0, mid, 4000) < xi) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> range(double lo, double hi, int n) {
    std::vector<double> out;
    for (int j = 0; j < n; ++j) out.push_back(lo + (hi - lo) * j / (n - 1));
    return out;
}

}  // namespace

TEST_CASE("pressure evaluation") {
    CHECK(PressureLaw::isothermal_ideal(1.0).pressure(1.0) == 1.0);
    CHECK(PressureLaw::isentropic(2.0, 1.4).pressure(1.0) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(PressureLaw::isothermal_ideal(340.0).pressure(0.8) ==
          doctest::Approx(92480.0).epsilon(1e-14));

    CHECK_THROWS_AS(PressureLaw::isothermal_ideal(1.0).pressure(0.0),
                    DomainError);
    CHECK_THROWS_AS(PressureLaw::isothermal_ideal(1.0).pressure(-1.0),
                    DomainError);
    CHECK_THROWS_AS(PressureLaw::isothermal_ideal(-3.0), DomainError);
    CHECK_THROWS_AS(PressureLaw::isentropic(1.0, 1.0), DomainError);
}

TEST_CASE("pressure derivative") {
    const auto iso3 = PressureLaw::isothermal_ideal(3.0);
    CHECK(iso3.pressure_derivative(0.3) == 9.0);
    CHECK(iso3.pressure_derivative(7.0) == 9.0);
    CHECK(PressureLaw::isentropic(1.0, 2.0).pressure_derivative(2.0) ==
          doctest::Approx(4.0).epsilon(1e-14));

    // tabulated samples of p = rho^2: derivative near 3 at rho = 1.5
    std::vector<double> rho, p;
    for (double r = 0.5; r <= 3.0 + 1e-12; r += 0.05) {
        rho.push_back(r);
        p.push_back(r * r);
    }
    const auto tab = PressureLaw::tabulated(rho, p);
    CHECK(tab.pressure_derivative(1.5) == doctest::Approx(3.0).epsilon(2e-2));
    CHECK_THROWS_AS(tab.pressure(5.0), DomainError);
    CHECK_THROWS_AS(PressureLaw::tabulated({1.0, 2.0}, {2.0, 1.0}),
                    DomainError);
}

TEST_CASE("pressure potential curvature") {
    CHECK(PressureLaw::isothermal_ideal(1.0).potential_second(2.0) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(PressureLaw::isentropic(1.0, 2.0).potential_second(1.0) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(PressureLaw::isothermal_ideal(2.0).potential_second(4.0) ==
          doctest::Approx(1.0).epsilon(1e-14));

    // defining relation rho P'' = p' across laws and densities
    const auto laws = {PressureLaw::isothermal_ideal(1.7),
                       PressureLaw::isentropic(0.8, 1.4)};
    for (const auto& law : laws) {
        for (double r : range(0.2, 8.0, 41)) {
            CHECK(law.potential_second(r) * r ==
                  doctest::Approx(law.pressure_derivative(r)).epsilon(1e-12));
        }
    }
}

TEST_CASE("pressure potential is consistent with its curvature") {
    for (const auto& law :
         {PressureLaw::isothermal_ideal(1.3), PressureLaw::isentropic(2.0, 1.4)}) {
        const double h = 1e-4;
        for (double r : {0.5, 1.0, 2.5}) {
            const double second =
                (law.potential(r + h) - 2.0 * law.potential(r) +
                 law.potential(r - h)) /
                (h * h);
            CHECK(second == doctest::Approx(law.potential_second(r)).epsilon(1e-6));
        }
        CHECK(law.potential(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    }
}

TEST_CASE("characteristic coordinate") {
    const auto iso1 = PressureLaw::isothermal_ideal(1.0);
    CHECK(iso1.riemann_R(1.0) == 0.0);

    const auto iso2 = PressureLaw::isothermal_ideal(2.0);
    const double e = std::exp(1.0);
    CHECK(iso2.riemann_R(e) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(iso2.riemann_R(e) ==
          doctest::Approx(simpson_oracle(iso2, 1.0, e)).epsilon(1e-10));

    const auto isen = PressureLaw::isentropic(1.0, 2.0);
    const double expected = 2.0 * std::sqrt(2.0);  // oracle value, frozen
    CHECK(isen.riemann_R(4.0) == doctest::Approx(expected).epsilon(1e-11));
    CHECK(isen.riemann_R(4.0) ==
          doctest::Approx(simpson_oracle(isen, 1.0, 4.0)).epsilon(1e-10));

    // closed form matches quadrature for the isothermal law
    for (double r : range(0.1, 10.0, 23)) {
        CHECK(std::abs(iso2.riemann_R(r) - 2.0 * std::log(r)) <= 1e-12);
    }

    // strict monotonicity on a 1000-point sample
    double prev = -1e300;
    for (double r : range(0.05, 20.0, 1000)) {
        const double value = isen.riemann_R(r);
        CHECK(value > prev);
        prev = value;
    }
}

TEST_CASE("characteristic coordinate inversion") {
    const auto iso1 = PressureLaw::isothermal_ideal(1.0);
    CHECK(iso1.riemann_R_inverse(0.0) == 1.0);

    const auto iso2 = PressureLaw::isothermal_ideal(2.0);
    CHECK(iso2.riemann_R_inverse(2.0) ==
          doctest::Approx(std::exp(1.0)).epsilon(1e-13));

    const auto isen = PressureLaw::isentropic(1.0, 2.0);
    const double xi = isen.riemann_R(3.0);
    CHECK(isen.riemann_R_inverse(xi) == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(bisect_inverse_oracle(isen, xi, 0.5, 6.0) ==
          doctest::Approx(3.0).epsilon(1e-6));

    for (const auto& law : {iso1, iso2, isen}) {
        for (double r : {0.1, 1.0, 10.0}) {
            CHECK(law.riemann_R_inverse(law.riemann_R(r)) ==
                  doctest::Approx(r).epsilon(1e-10));
        }
    }

    // below the vacuum limit of the isentropic coordinate
    CHECK_THROWS_AS(isen.riemann_R_inverse(-5.0), RangeError);
}

TEST_CASE("riemann transform round trip over a state grid") {
    const auto laws = {PressureLaw::isothermal_ideal(1.4),
                       PressureLaw::isentropic(1.2, 1.4)};
    for (const auto& law : laws) {
        for (double rho : range(0.1, 10.0, 12)) {
            for (double v : range(-5.0, 5.0, 11)) {
                const auto [rp, rm] = component_to_riemann(law, {rho, v});
                const auto back = riemann_to_component(law, rp, rm);
                CHECK(std::abs(back.rho - rho) <= 1e-10 * (1.0 + rho));
                CHECK(std::abs(back.v - v) <= 1e-12);
            }
        }
    }
}

TEST_CASE("riemann transform spot values") {
    const auto iso1 = PressureLaw::isothermal_ideal(1.0);
    auto [rp, rm] = component_to_riemann(iso1, {1.0, 0.0});
    CHECK(rp == 0.0);
    CHECK(rm == 0.0);
    std::tie(rp, rm) = component_to_riemann(iso1, {1.0, 0.3});
    CHECK(rp == doctest::Approx(0.3));
    CHECK(rm == doctest::Approx(-0.3));

    const auto iso2 = PressureLaw::isothermal_ideal(2.0);
    std::tie(rp, rm) = component_to_riemann(iso2, {std::exp(1.0), 1.0});
    CHECK(rp == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(rm == doctest::Approx(1.0).epsilon(1e-13));

    const auto back = riemann_to_component(iso2, 3.0, 1.0);
    CHECK(back.rho == doctest::Approx(std::exp(1.0)).epsilon(1e-13));
    CHECK(back.v == doctest::Approx(1.0));
}

TEST_CASE("characteristic speeds") {
    const auto iso1 = PressureLaw::isothermal_ideal(1.0);
    CHECK(eigenvalues(iso1, {1.0, 0.0}) == std::pair{1.0, -1.0});
    const auto fast = PressureLaw::isothermal_ideal(340.0);
    CHECK(eigenvalues(fast, {1.0, 10.0}) == std::pair{350.0, -330.0});
    const auto isen = PressureLaw::isentropic(1.0, 2.0);
    const auto [lp, lm] = eigenvalues(isen, {2.0, 1.0});
    CHECK(lp == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(lm == doctest::Approx(-1.0).epsilon(1e-14));

    // ordering with gap 2 sqrt(p')
    for (double rho : range(0.2, 5.0, 9)) {
        for (double v : range(-3.0, 3.0, 7)) {
            const auto [a, b] = eigenvalues(isen, {rho, v});
            CHECK(a > b);
            CHECK(a - b ==
                  doctest::Approx(2.0 *
                                  std::sqrt(isen.pressure_derivative(rho)))
                      .epsilon(1e-13));
        }
    }
}

TEST_CASE("tabulated law transform") {
    std::vector<double> rho, p;
    for (double r = 0.2; r <= 4.0 + 1e-12; r += 0.02) {
        rho.push_back(r);
        p.push_back(1.21 * r);  // sampled isothermal law, a = 1.1
    }
    const auto tab = PressureLaw::tabulated(rho, p);
    const auto iso = PressureLaw::isothermal_ideal(1.1);
    for (double r : {0.5, 1.0, 2.0, 3.5}) {
        CHECK(tab.riemann_R(r) == doctest::Approx(iso.riemann_R(r)).epsilon(5e-4));
        CHECK(tab.riemann_R_inverse(tab.riemann_R(r)) ==
              doctest::Approx(r).epsilon(1e-9));
    }
    CHECK_THROWS_AS(tab.riemann_R_inverse(100.0), RangeError);
}
