#include "jost/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace jost {

namespace num {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - b* (error weights)
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

using State = std::array<cplx, 2>;

struct Deriv {
    const std::function<cplx(double)>& coeff;
    State operator()(double r, const State& y) const { return {y[1], coeff(r) * y[0]}; }
};

double state_norm(const State& s) { return std::max(std::abs(s[0]), std::abs(s[1])); }

}  // namespace

void integrate_radial(const std::function<cplx(double)>& coeff, double r0,
                      std::array<cplx, 2> y0, std::span<const double> nodes,
                      double tol, const std::function<void(const OdePoint&)>& sink) {
    if (nodes.empty()) return;
    Deriv f{coeff};
    double r = r0;
    State y = y0;
    const double dir = nodes.back() > r0 ? 1.0 : -1.0;
    const double span = std::abs(nodes.back() - r0);
    double h = dir * std::min(span / 16.0, 0.1 * (std::abs(r0) + span));

    for (double target : nodes) {
        if ((target - r) * dir < 0.0)
            throw std::invalid_argument("integrate_radial: nodes not in march order");
        int guard = 0;
        while ((target - r) * dir > 1e-14 * (1.0 + std::abs(target))) {
            if (++guard > 2000000)
                throw ComputationError("integrate_radial: step limit exceeded near r = " +
                                       std::to_string(r));
            if (std::abs(h) > std::abs(target - r)) h = target - r;

            const State k1 = f(r, y);
            const State y2 = {y[0] + h * a21 * k1[0], y[1] + h * a21 * k1[1]};
            const State k2 = f(r + c2 * h, y2);
            const State y3 = {y[0] + h * (a31 * k1[0] + a32 * k2[0]),
                              y[1] + h * (a31 * k1[1] + a32 * k2[1])};
            const State k3 = f(r + c3 * h, y3);
            const State y4 = {y[0] + h * (a41 * k1[0] + a42 * k2[0] + a43 * k3[0]),
                              y[1] + h * (a41 * k1[1] + a42 * k2[1] + a43 * k3[1])};
            const State k4 = f(r + c4 * h, y4);
            const State y5 = {
                y[0] + h * (a51 * k1[0] + a52 * k2[0] + a53 * k3[0] + a54 * k4[0]),
                y[1] + h * (a51 * k1[1] + a52 * k2[1] + a53 * k3[1] + a54 * k4[1])};
            const State k5 = f(r + c5 * h, y5);
            const State y6 = {y[0] + h * (a61 * k1[0] + a62 * k2[0] + a63 * k3[0] +
                                          a64 * k4[0] + a65 * k5[0]),
                              y[1] + h * (a61 * k1[1] + a62 * k2[1] + a63 * k3[1] +
                                          a64 * k4[1] + a65 * k5[1])};
            const State k6 = f(r + h, y6);
            const State y_new = {
                y[0] + h * (b1 * k1[0] + b3 * k3[0] + b4 * k4[0] + b5 * k5[0] + b6 * k6[0]),
                y[1] + h * (b1 * k1[1] + b3 * k3[1] + b4 * k4[1] + b5 * k5[1] + b6 * k6[1])};
            const State k7 = f(r + h, y_new);
            const State err = {h * (e1 * k1[0] + e3 * k3[0] + e4 * k4[0] + e5 * k5[0] +
                                    e6 * k6[0] + e7 * k7[0]),
                               h * (e1 * k1[1] + e3 * k3[1] + e4 * k4[1] + e5 * k5[1] +
                                    e6 * k6[1] + e7 * k7[1])};

            const double scale = 1.0 + std::max(state_norm(y), state_norm(y_new));
            const double err_norm = state_norm(err);
            const double budget = tol * std::abs(h) * scale;

            if (err_norm <= budget) {
                r += h;
                y = y_new;
                if (state_norm(y) > 1e250)
                    throw std::range_error("integrate_radial: solution overflow at r = " +
                                           std::to_string(r));
            }
            const double ratio = err_norm > 0.0 ? budget / err_norm : 10.0;
            double factor = 0.9 * std::pow(ratio, 0.2);
            factor = std::clamp(factor, 0.2, 5.0);
            h *= factor;
            const double h_min = 1e-15 * (1.0 + std::abs(r));
            if (std::abs(h) < h_min) h = dir * h_min;
        }
        r = target;
        sink(OdePoint{r, y[0], y[1]});
    }
}

cplx cauchy_derivative(const std::function<cplx(cplx)>& f, cplx k, double radius,
                       int points) {
    const double two_pi = 2.0 * std::numbers::pi;
    cplx acc = 0.0;
    for (int m = 0; m < points; ++m) {
        const double th = two_pi * m / points;
        const cplx ph{std::cos(th), std::sin(th)};
        acc += f(k + radius * ph) / ph;
    }
    return acc / (static_cast<double>(points) * radius);
}

std::pair<cplx, double> cauchy_derivative_checked(const std::function<cplx(cplx)>& f,
                                                  cplx k, double radius, int points) {
    const cplx d1 = cauchy_derivative(f, k, radius, points);
    const cplx d2 = cauchy_derivative(f, k, 0.5 * radius, points);
    return {d2, std::abs(d1 - d2)};
}

namespace {

cplx simpson_recurse(const std::function<cplx(double)>& f, double a, double b, cplx fa,
                     cplx fm, cplx fb, cplx whole, double tol, int depth, int max_depth) {
    const double m = 0.5 * (a + b);
    const cplx fl = f(0.5 * (a + m)), fr = f(0.5 * (m + b));
    const cplx left = (b - a) / 12.0 * (fa + 4.0 * fl + fm);
    const cplx right = (b - a) / 12.0 * (fm + 4.0 * fr + fb);
    const cplx delta = left + right - whole;
    if (depth >= max_depth || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_recurse(f, a, m, fa, fl, fm, left, 0.5 * tol, depth + 1, max_depth) +
           simpson_recurse(f, m, b, fm, fr, fb, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

cplx adaptive_simpson(const std::function<cplx(double)>& f, double a, double b,
                      double tol, int max_depth) {
    if (a == b) return 0.0;
    const cplx fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
    const cplx whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_recurse(f, a, b, fa, fm, fb, whole, tol, 0, max_depth);
}

cplx simpson_uniform(std::span<const cplx> values, double h) {
    const std::size_t n = values.size();
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("simpson_uniform: need an odd number of samples");
    cplx acc = values[0] + values[n - 1];
    for (std::size_t i = 1; i + 1 < n; ++i) acc += values[i] * (i % 2 ? 4.0 : 2.0);
    return acc * (h / 3.0);
}

Extrapolation extrapolate_to_zero(std::span<const double> x, std::span<const cplx> y) {
    const std::size_t n = x.size();
    if (n == 0 || y.size() != n)
        throw std::invalid_argument("extrapolate_to_zero: mismatched samples");
    Extrapolation out;
    std::vector<cplx> t(y.begin(), y.end());
    out.diagonal.push_back(t[0]);
    for (std::size_t i = 1; i < n; ++i) {
        // Neville update: t[j] becomes the degree-(i-j) estimate using x_j..x_i
        for (std::size_t j = i; j-- > 0;) {
            const double xi = x[i], xj = x[j];
            t[j] = t[j + 1] + (t[j + 1] - t[j]) * xi / (xj - xi);
        }
        out.diagonal.push_back(t[0]);
        out.increments.push_back(std::abs(out.diagonal[i] - out.diagonal[i - 1]));
    }
    out.value = out.diagonal.back();
    return out;
}

}  // namespace num

}  // namespace jost
