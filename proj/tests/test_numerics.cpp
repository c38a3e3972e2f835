#include <doctest.h>

#include <cmath>
#include <vector>

#include "blendflow/errors.hpp"
#include "blendflow/numerics.hpp"

using namespace blendflow;
using namespace blendflow::numerics;

TEST_CASE("adaptive quadrature on smooth integrands") {
    CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0, 1e-12) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return 1.0 / x; }, 1.0, std::exp(1.0),
                    1e-12) == doctest::Approx(1.0).epsilon(1e-11));
    // orientation flips the sign
    CHECK(integrate([](double x) { return x; }, 1.0, 0.0, 1e-12) ==
          doctest::Approx(-0.5));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12) ==
          doctest::Approx(2.0).epsilon(1e-11));
    CHECK(integrate([](double x) { return x; }, 2.0, 2.0, 1e-12) == 0.0);
}

TEST_CASE("safeguarded newton root finding") {
    const auto f = [](double x) { return x * x - 2.0; };
    const auto df = [](double x) { return 2.0 * x; };
    const double root = find_root(f, df, 0.0, 2.0, 1e-15, 1e-15);
    CHECK(root == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(find_root(f, df, 2.0, 3.0, 1e-12), NonconvergenceError);
}

TEST_CASE("monotone cubic interpolation of increasing data") {
    std::vector<double> xs, ys;
    for (double x = 0.5; x <= 3.0 + 1e-12; x += 0.05) {
        xs.push_back(x);
        ys.push_back(x * x);
    }
    const MonotoneCubic interp(xs, ys);

    CHECK(interp(1.5) == doctest::Approx(2.25).epsilon(1e-6));

    // Derivative agrees with a finite-difference probe of the interpolant.
    const double h = 1e-6;
    const double fd = (interp(1.5 + h) - interp(1.5 - h)) / (2.0 * h);
    CHECK(interp.derivative(1.5) == doctest::Approx(fd).epsilon(1e-6));
    CHECK(interp.derivative(1.5) == doctest::Approx(3.0).epsilon(2e-2));

    // Strict monotonicity is preserved pointwise.
    double prev = interp(0.5);
    for (double x = 0.5 + 1e-3; x <= 3.0; x += 1e-3) {
        const double y = interp(x);
        CHECK(y > prev);
        prev = y;
    }
    CHECK_THROWS_AS(interp(0.2), RangeError);
    CHECK_THROWS_AS(MonotoneCubic({1.0, 1.0}, {1.0, 2.0}), DomainError);
}

TEST_CASE("gradient stencils") {
    const std::vector<double> linear{1.0, 1.5, 2.0, 2.5, 3.0};
    const auto g = gradient(linear, 0.5);
    for (double v : g) CHECK(v == doctest::Approx(1.0).epsilon(1e-13));

    // second-order interior on a smooth profile
    const double dx = 0.01;
    std::vector<double> smooth;
    for (int k = 0; k < 101; ++k) smooth.push_back(std::sin(k * dx));
    const auto gs = gradient(smooth, dx);
    CHECK(gs[50] == doctest::Approx(std::cos(50 * dx)).epsilon(1e-4));
}

TEST_CASE("adaptive ode integration hits requested points") {
    const OdeRhs expo = [](double, const std::vector<double>& y,
                           std::vector<double>& dy) { dy[0] = y[0]; };
    const auto sol = ode45_at(expo, {0.0, 0.5, 1.0}, {1.0}, 1e-11, 1e-13);
    REQUIRE(sol.size() == 3);
    CHECK(sol[1][0] == doctest::Approx(std::exp(0.5)).epsilon(1e-9));
    CHECK(sol[2][0] == doctest::Approx(std::exp(1.0)).epsilon(1e-9));

    const OdeRhs circle = [](double, const std::vector<double>& y,
                             std::vector<double>& dy) {
        dy[0] = -y[1];
        dy[1] = y[0];
    };
    const auto rot = ode45_at(circle, {0.0, M_PI}, {1.0, 0.0}, 1e-11, 1e-13);
    CHECK(rot[1][0] == doctest::Approx(-1.0).epsilon(1e-8));
    CHECK(rot[1][1] == doctest::Approx(0.0).epsilon(1e-8));
}
