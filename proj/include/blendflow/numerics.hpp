#pragma once

#include <functional>
#include <vector>

namespace blendflow::numerics {

/// Adaptive Simpson quadrature of f over [a, b] (a > b allowed, sign flips).
/// Throws QuadratureError if the absolute tolerance cannot be met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol);

/// Safeguarded Newton iteration for f(x) = 0 on the bracket [lo, hi].
/// Falls back to bisection whenever the Newton step leaves the bracket.
/// f(lo) and f(hi) must have opposite signs. Stops when the bracket width
/// drops below x_tol * (1 + |x|) or |f(x)| <= f_tol.
double find_root(const std::function<double(double)>& f,
                 const std::function<double(double)>& df, double lo, double hi,
                 double x_tol, double f_tol = 0.0, int max_iter = 200);

/// Monotone piecewise-cubic interpolant (Fritsch-Carlson slopes).
/// Preserves strict monotonicity of the data; derivative stays >= 0 for
/// increasing samples.
class MonotoneCubic {
  public:
    MonotoneCubic() = default;
    MonotoneCubic(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    double derivative(double x) const;

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

  private:
    int interval(double x) const;
    std::vector<double> x_, y_, slope_;
};

/// Gradient of equally spaced samples: second-order central differences in
/// the interior, first-order one-sided at both ends.
std::vector<double> gradient(const std::vector<double>& y, double dx);

using OdeRhs = std::function<void(double x, const std::vector<double>& y,
                                  std::vector<double>& dydx)>;

/// Adaptive Cash-Karp 4(5) integration reporting the solution at every
/// requested abscissa. xs must be increasing and start at the initial point.
std::vector<std::vector<double>> ode45_at(const OdeRhs& f,
                                          const std::vector<double>& xs,
                                          std::vector<double> y0,
                                          double rel_tol = 1e-10,
                                          double abs_tol = 1e-12,
                                          long max_steps = 2000000);

}  // namespace blendflow::numerics
