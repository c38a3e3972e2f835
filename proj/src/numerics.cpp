#include "blendflow/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "blendflow/errors.hpp"

namespace blendflow::numerics {

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double fa, double b, double fb, double m, double fm,
                        double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(f, a, fa, m, fm, flm);
    const double right = simpson(f, m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    if (depth <= 0) {
        throw QuadratureError("adaptive quadrature: tolerance unreachable");
    }
    return adaptive_simpson(f, a, fa, m, fm, lm, flm, left, 0.5 * tol,
                            depth - 1) +
           adaptive_simpson(f, m, fm, b, fb, rm, frm, right, 0.5 * tol,
                            depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
    if (a == b) {
        return 0.0;
    }
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = simpson(f, a, fa, b, fb, fm);
    return sign *
           adaptive_simpson(f, a, fa, b, fb, m, fm, whole, abs_tol, 48);
}

double find_root(const std::function<double(double)>& f,
                 const std::function<double(double)>& df, double lo, double hi,
                 double x_tol, double f_tol, int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw NonconvergenceError("find_root: endpoints do not bracket a root");
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < max_iter; ++it) {
        const double fx = f(x);
        if (fx == 0.0 || std::abs(fx) <= f_tol) return x;
        if ((fx > 0.0) == (fhi > 0.0)) {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
        if (hi - lo <= x_tol * (1.0 + std::abs(x))) {
            return 0.5 * (lo + hi);
        }
        const double d = df(x);
        double next = x - fx / d;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);  // Newton left the bracket
        }
        x = next;
    }
    throw NonconvergenceError("find_root: no convergence within iteration cap");
}

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n) {
        throw DomainError("MonotoneCubic: need at least two samples");
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
        if (!(x_[j + 1] > x_[j])) {
            throw DomainError("MonotoneCubic: abscissae must strictly increase");
        }
    }
    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        h[j] = x_[j + 1] - x_[j];
        delta[j] = (y_[j + 1] - y_[j]) / h[j];
    }
    slope_.assign(n, 0.0);
    slope_[0] = delta[0];
    slope_[n - 1] = delta[n - 2];
    for (std::size_t j = 1; j + 1 < n; ++j) {
        if (delta[j - 1] * delta[j] <= 0.0) {
            slope_[j] = 0.0;
        } else {
            // Fritsch-Carlson weighted harmonic mean
            const double w1 = 2.0 * h[j] + h[j - 1];
            const double w2 = h[j] + 2.0 * h[j - 1];
            slope_[j] = (w1 + w2) / (w1 / delta[j - 1] + w2 / delta[j]);
        }
    }
    // Clamp endpoint slopes so the first/last cubics stay monotone.
    for (std::size_t j : {std::size_t{0}, n - 1}) {
        const double d = delta[j == 0 ? 0 : n - 2];
        if (slope_[j] * d <= 0.0) {
            slope_[j] = 0.0;
        } else if (std::abs(slope_[j]) > 3.0 * std::abs(d)) {
            slope_[j] = 3.0 * d;
        }
    }
}

int MonotoneCubic::interval(double x) const {
    if (x < x_.front() || x > x_.back()) {
        throw RangeError("MonotoneCubic: evaluation outside the sample range");
    }
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    int j = static_cast<int>(it - x_.begin()) - 1;
    if (j < 0) j = 0;
    if (j >= static_cast<int>(x_.size()) - 1) j = static_cast<int>(x_.size()) - 2;
    return j;
}

double MonotoneCubic::operator()(double x) const {
    const int j = interval(x);
    const double h = x_[j + 1] - x_[j];
    const double s = (x - x_[j]) / h;
    const double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
    const double h10 = s * (1.0 - s) * (1.0 - s);
    const double h01 = s * s * (3.0 - 2.0 * s);
    const double h11 = s * s * (s - 1.0);
    return h00 * y_[j] + h10 * h * slope_[j] + h01 * y_[j + 1] +
           h11 * h * slope_[j + 1];
}

double MonotoneCubic::derivative(double x) const {
    const int j = interval(x);
    const double h = x_[j + 1] - x_[j];
    const double s = (x - x_[j]) / h;
    const double d00 = 6.0 * s * (s - 1.0) / h;
    const double d10 = (1.0 - s) * (1.0 - 3.0 * s);
    const double d01 = -d00;
    const double d11 = s * (3.0 * s - 2.0);
    return d00 * y_[j] + d10 * slope_[j] + d01 * y_[j + 1] + d11 * slope_[j + 1];
}

std::vector<double> gradient(const std::vector<double>& y, double dx) {
    const std::size_t n = y.size();
    std::vector<double> g(n, 0.0);
    if (n < 2) {
        return g;
    }
    g[0] = (y[1] - y[0]) / dx;
    g[n - 1] = (y[n - 1] - y[n - 2]) / dx;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        g[k] = (y[k + 1] - y[k - 1]) / (2.0 * dx);
    }
    return g;
}

namespace {

// Cash-Karp tableau
constexpr double kA2 = 0.2, kA3 = 0.3, kA4 = 0.6, kA5 = 1.0, kA6 = 0.875;
constexpr double kB21 = 0.2;
constexpr double kB31 = 3.0 / 40.0, kB32 = 9.0 / 40.0;
constexpr double kB41 = 0.3, kB42 = -0.9, kB43 = 1.2;
constexpr double kB51 = -11.0 / 54.0, kB52 = 2.5, kB53 = -70.0 / 27.0,
                 kB54 = 35.0 / 27.0;
constexpr double kB61 = 1631.0 / 55296.0, kB62 = 175.0 / 512.0,
                 kB63 = 575.0 / 13824.0, kB64 = 44275.0 / 110592.0,
                 kB65 = 253.0 / 4096.0;
constexpr double kC1 = 37.0 / 378.0, kC3 = 250.0 / 621.0, kC4 = 125.0 / 594.0,
                 kC6 = 512.0 / 1771.0;
constexpr double kD1 = kC1 - 2825.0 / 27648.0, kD3 = kC3 - 18575.0 / 48384.0,
                 kD4 = kC4 - 13525.0 / 55296.0, kD5 = -277.0 / 14336.0,
                 kD6 = kC6 - 0.25;

}  // namespace

std::vector<std::vector<double>> ode45_at(const OdeRhs& f,
                                          const std::vector<double>& xs,
                                          std::vector<double> y0,
                                          double rel_tol, double abs_tol,
                                          long max_steps) {
    if (xs.empty()) {
        return {};
    }
    const std::size_t n = y0.size();
    std::vector<std::vector<double>> out;
    out.reserve(xs.size());
    out.push_back(y0);

    std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), tmp(n),
        y5(n), err(n);
    double x = xs.front();
    double h = 0.0;
    long steps = 0;

    for (std::size_t target = 1; target < xs.size(); ++target) {
        const double x_goal = xs[target];
        if (!(x_goal > x)) {
            throw DomainError("ode45_at: abscissae must strictly increase");
        }
        if (h <= 0.0) {
            h = (x_goal - x) / 16.0;
        }
        while (x < x_goal) {
            if (++steps > max_steps) {
                throw NonconvergenceError("ode45_at: step budget exhausted");
            }
            h = std::min(h, x_goal - x);
            f(x, y0, k1);
            for (std::size_t i = 0; i < n; ++i)
                tmp[i] = y0[i] + h * kB21 * k1[i];
            f(x + kA2 * h, tmp, k2);
            for (std::size_t i = 0; i < n; ++i)
                tmp[i] = y0[i] + h * (kB31 * k1[i] + kB32 * k2[i]);
            f(x + kA3 * h, tmp, k3);
            for (std::size_t i = 0; i < n; ++i)
                tmp[i] = y0[i] + h * (kB41 * k1[i] + kB42 * k2[i] + kB43 * k3[i]);
            f(x + kA4 * h, tmp, k4);
            for (std::size_t i = 0; i < n; ++i)
                tmp[i] = y0[i] + h * (kB51 * k1[i] + kB52 * k2[i] +
                                      kB53 * k3[i] + kB54 * k4[i]);
            f(x + kA5 * h, tmp, k5);
            for (std::size_t i = 0; i < n; ++i)
                tmp[i] = y0[i] + h * (kB61 * k1[i] + kB62 * k2[i] +
                                      kB63 * k3[i] + kB64 * k4[i] + kB65 * k5[i]);
            f(x + kA6 * h, tmp, k6);

            double err_ratio = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                y5[i] = y0[i] + h * (kC1 * k1[i] + kC3 * k3[i] + kC4 * k4[i] +
                                     kC6 * k6[i]);
                err[i] = h * (kD1 * k1[i] + kD3 * k3[i] + kD4 * k4[i] +
                              kD5 * k5[i] + kD6 * k6[i]);
                const double scale =
                    abs_tol + rel_tol * std::max(std::abs(y0[i]), std::abs(y5[i]));
                err_ratio = std::max(err_ratio, std::abs(err[i]) / scale);
            }
            if (err_ratio <= 1.0) {
                x += h;
                y0 = y5;
                const double grow =
                    err_ratio > 0.0
                        ? 0.9 * std::pow(err_ratio, -0.2)
                        : 5.0;
                h *= std::clamp(grow, 0.2, 5.0);
            } else {
                h *= std::max(0.1, 0.9 * std::pow(err_ratio, -0.25));
                if (!(h > 0.0) || x + h == x) {
                    throw NonconvergenceError("ode45_at: step size underflow");
                }
            }
        }
        out.push_back(y0);
    }
    return out;
}

}  // namespace blendflow::numerics
