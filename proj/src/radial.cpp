#include "jost/radial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jost/numerics.hpp"
#include "jost/specfun.hpp"

namespace jost::radial {

namespace sf = jost::specfun;

namespace {

const cplx kI{0.0, 1.0};

std::function<cplx(double)> coefficient(const Potential& pot, int l, cplx k) {
    const double ll1 = static_cast<double>(l) * (l + 1);
    const cplx k2 = k * k;
    return [&pot, ll1, k2](double r) { return ll1 / (r * r) + pot(r) - k2; };
}

void check_tol(double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("radial: tol must be > 0");
}

void check_l(int l) {
    if (l < 0 || l > 40) throw std::invalid_argument("radial: need 0 <= l <= 40");
}

// March plan: requested output nodes merged with mandatory stops, tagged so
// the sink only records outputs.
struct Plan {
    std::vector<double> stops;
    std::vector<bool> is_output;
};

// outputs must be sorted ascending regardless of march direction
Plan build_plan(const std::vector<double>& outputs, const std::vector<double>& breaks,
                double from, bool ascending) {
    Plan plan;
    std::vector<double> merged = outputs;
    const double lo = ascending ? from : outputs.front();
    const double hi = ascending ? outputs.back() : from;
    for (double b : breaks)
        if (b > lo && b < hi) merged.push_back(b);
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    if (!ascending) std::reverse(merged.begin(), merged.end());
    for (double s : merged) {
        if (ascending ? s <= from : s >= from) continue;
        plan.stops.push_back(s);
        plan.is_output.push_back(std::binary_search(outputs.begin(), outputs.end(), s));
    }
    return plan;
}

// two-term Frobenius start of the regular solution
std::array<cplx, 2> regular_seed(const Potential& pot, int l, cplx k, double r) {
    const double dfac = sf::double_factorial_odd_d(l);
    const cplx c1 = (pot(0.5 * r) - k * k) / (4.0 * l + 6.0);
    const double rl = std::pow(r, l);
    const cplx u = rl * r * (1.0 + c1 * r * r) / dfac;
    const cplx du = rl * ((l + 1.0) + (l + 3.0) * c1 * r * r) / dfac;
    return {u, du};
}

std::array<cplx, 2> irregular_seed(int l, cplx k, double r) {
    const cplx kr = k * r;
    const cplx h = sf::spherical_h_minus(l, kr);
    const cplx dh = sf::spherical_h_minus_deriv(l, kr);
    return {-kI * k * r * h, -kI * k * (h + kr * dh)};
}

}  // namespace

RadialGrid RadialGrid::for_potential(const Potential& pot, std::vector<double> nodes) {
    RadialGrid g;
    g.nodes = std::move(nodes);
    g.breakpoints = pot.breakpoints();
    return g;
}

RadialSolution integrate_regular(const Potential& pot, int l, cplx k,
                                 const RadialGrid& grid, double tol) {
    check_tol(tol);
    check_l(l);
    if (grid.nodes.empty()) throw std::invalid_argument("integrate_regular: no nodes");
    if (!std::is_sorted(grid.nodes.begin(), grid.nodes.end()))
        throw std::invalid_argument("integrate_regular: nodes must be increasing");

    RadialSolution sol{SolutionKind::Regular, k, l, {}, {}, {}};
    const double r_min = kOriginFraction * pot.cutoff();

    std::vector<double> marched;
    for (double r : grid.nodes) {
        if (r <= r_min) {
            auto [u, du] = regular_seed(pot, l, k, std::max(r, 1e-300));
            sol.r.push_back(r);
            sol.values.push_back(u);
            sol.derivatives.push_back(du);
        } else {
            marched.push_back(r);
        }
    }
    if (marched.empty()) return sol;

    std::vector<double> breaks = grid.breakpoints;
    for (double b : pot.breakpoints()) breaks.push_back(b);
    Plan plan = build_plan(marched, breaks, r_min, /*ascending=*/true);

    std::size_t idx = 0;
    num::integrate_radial(coefficient(pot, l, k), r_min, regular_seed(pot, l, k, r_min),
                          plan.stops, tol, [&](const num::OdePoint& pt) {
                              if (plan.is_output[idx++]) {
                                  sol.r.push_back(pt.r);
                                  sol.values.push_back(pt.u);
                                  sol.derivatives.push_back(pt.du);
                              }
                          });
    return sol;
}

RadialSolution integrate_irregular(const Potential& pot, int l, cplx k,
                                   const RadialGrid& grid, double tol) {
    check_tol(tol);
    check_l(l);
    if (k == cplx(0.0, 0.0))
        throw std::invalid_argument("integrate_irregular: k must be nonzero");
    if (grid.nodes.empty()) throw std::invalid_argument("integrate_irregular: no nodes");
    if (!std::is_sorted(grid.nodes.begin(), grid.nodes.end()))
        throw std::invalid_argument("integrate_irregular: nodes must be increasing");
    if (!(grid.nodes.front() > 0.0))
        throw std::invalid_argument("integrate_irregular: nodes must be positive");

    const double R = pot.cutoff();
    RadialSolution sol{SolutionKind::Irregular, k, l, {}, {}, {}};
    sol.r.assign(grid.nodes.begin(), grid.nodes.end());
    sol.values.resize(sol.r.size());
    sol.derivatives.resize(sol.r.size());

    std::vector<double> interior;
    for (std::size_t i = 0; i < sol.r.size(); ++i) {
        if (sol.r[i] >= R) {
            auto [u, du] = irregular_seed(l, k, sol.r[i]);
            sol.values[i] = u;
            sol.derivatives[i] = du;
        } else {
            interior.push_back(sol.r[i]);
        }
    }
    if (interior.empty()) return sol;

    std::vector<double> breaks = grid.breakpoints;
    for (double b : pot.breakpoints()) breaks.push_back(b);
    Plan plan = build_plan(interior, breaks, R, /*ascending=*/false);

    std::vector<num::OdePoint> got;
    std::size_t idx = 0;
    num::integrate_radial(coefficient(pot, l, k), R, irregular_seed(l, k, R), plan.stops,
                          tol, [&](const num::OdePoint& pt) {
                              if (plan.is_output[idx++]) got.push_back(pt);
                          });
    // marched high-to-low; write back into ascending slots
    for (const auto& pt : got) {
        const auto it = std::lower_bound(sol.r.begin(), sol.r.end(), pt.r);
        const std::size_t i = static_cast<std::size_t>(it - sol.r.begin());
        sol.values[i] = pt.u;
        sol.derivatives[i] = pt.du;
    }
    return sol;
}

cplx jost_function(const Potential& pot, int l, cplx k, double tol) {
    check_tol(tol);
    check_l(l);
    const double R = pot.cutoff();

    RadialGrid grid = RadialGrid::for_potential(pot, {R});
    const RadialSolution reg = integrate_regular(pot, l, k, grid, tol);
    const cplx phi = reg.values.back();
    const cplx dphi = reg.derivatives.back();

    cplx f, df;
    if (k == cplx(0.0, 0.0)) {
        if (l != 0) throw std::domain_error("jost_function: k = 0 requires l = 0");
        f = 1.0;  // lim k->0 of -i k r h^-_0(kr) = e^{-ikr} -> 1
        df = 0.0;
    } else {
        auto seed = irregular_seed(l, k, R);
        f = seed[0];
        df = seed[1];
    }

    cplx kl = 1.0;
    for (int i = 0; i < l; ++i) kl *= k;
    return kl * sf::wronskian(f, df, phi, dphi);
}

DerivativeResult jost_derivative(const Potential& pot, int l, cplx k, double tol) {
    check_tol(tol);
    check_l(l);
    // generous circle: f_l is entire of exponential type ~ 2 cutoff, and a
    // larger radius damps ODE evaluation noise by 1/h
    double h = std::min(0.2 * std::max(1.0, std::abs(k)), 0.5 / pot.cutoff());
    if (l >= 1) {
        if (k == cplx(0.0, 0.0))
            throw std::domain_error("jost_derivative: k = 0 requires l = 0");
        if (std::abs(k) < 2.0 * h) h = 0.25 * std::abs(k);  // keep the circle off k = 0
    }
    const auto f = [&](cplx z) { return jost_function(pot, l, z, tol); };
    auto [value, err] = num::cauchy_derivative_checked(f, k, h);
    if (err > 1e-6 * (1.0 + std::abs(value))) {
        h *= 0.2;
        std::tie(value, err) = num::cauchy_derivative_checked(f, k, h);
        if (err > 1e-5 * (1.0 + std::abs(value)))
            throw ComputationError(
                "jost_derivative: circle rule failed to converge, consistency " +
                std::to_string(err));
    }
    return {value, err};
}

double wronskian_identity_residual(const Potential& pot, int l, cplx k,
                                   std::span<const double> r_samples, double tol) {
    check_tol(tol);
    check_l(l);
    if (r_samples.empty())
        throw std::invalid_argument("wronskian_identity_residual: no samples");
    const double R = pot.cutoff();
    const double delta = 1e-4 * R;

    std::vector<double> nodes;
    for (double r : r_samples) {
        if (!(r - delta > 0.0))
            throw std::invalid_argument("wronskian_identity_residual: sample too close to 0");
        nodes.push_back(r - delta);
        nodes.push_back(r);
        nodes.push_back(r + delta);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    RadialGrid grid = RadialGrid::for_potential(pot, nodes);

    const RadialSolution base = integrate_irregular(pot, l, k, grid, tol);

    // circle-rule k-derivatives of the irregular solution at every node
    const int M = 16;
    double h = std::min(0.1 * std::max(1.0, std::abs(k)), 0.3 / R);
    if (l >= 1) h = std::min(h, 0.25 * std::abs(k));  // k = 0 is an order-l pole here
    std::vector<cplx> fdot(nodes.size(), 0.0), fdot_dr(nodes.size(), 0.0);
    for (int m = 0; m < M; ++m) {
        const double th = 2.0 * std::numbers::pi * m / M;
        const cplx ph{std::cos(th), std::sin(th)};
        const RadialSolution s = integrate_irregular(pot, l, k + h * ph, grid, tol);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            fdot[i] += s.values[i] / ph;
            fdot_dr[i] += s.derivatives[i] / ph;
        }
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        fdot[i] /= M * h;
        fdot_dr[i] /= M * h;
    }

    const auto index_of = [&](double r) {
        return static_cast<std::size_t>(
            std::lower_bound(nodes.begin(), nodes.end(), r) - nodes.begin());
    };
    const auto w_at = [&](std::size_t i) {
        return sf::wronskian(fdot[i], fdot_dr[i], base.values[i], base.derivatives[i]);
    };

    double worst = 0.0;
    for (double r : r_samples) {
        const std::size_t im = index_of(r - delta), i0 = index_of(r), ip = index_of(r + delta);
        const cplx dw = (w_at(ip) - w_at(im)) / (2.0 * delta);
        const cplx rhs = 2.0 * k * base.values[i0] * base.values[i0];
        worst = std::max(worst, std::abs(dw - rhs));
    }
    return worst;
}

}  // namespace jost::radial
