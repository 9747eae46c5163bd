// Small numeric kernels shared across the library: an adaptive embedded
// Runge-Kutta 5(4) pair for the complex radial equation, a Cauchy-circle
// derivative for analytic functions of k, adaptive Simpson quadrature and
// Neville extrapolation to zero.
#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "jost/types.hpp"

namespace jost::num {

struct OdePoint {
    double r;
    cplx u;
    cplx du;
};

// Integrate u'' = c(r) u from r0 with state (u, u'), reporting the state at
// each requested node (sorted in march order, r0 excluded, last node is the
// end point). Steps never cross a node, so potential discontinuities are
// honored by listing them. tol is the local error budget per unit length.
// Throws ComputationError on step failure, std::range_error on overflow.
void integrate_radial(const std::function<cplx(double)>& coeff, double r0,
                      std::array<cplx, 2> y0, std::span<const double> nodes,
                      double tol, const std::function<void(const OdePoint&)>& sink);

// M-point circle rule for f'(k); spectral accuracy for analytic f.
cplx cauchy_derivative(const std::function<cplx(cplx)>& f, cplx k, double radius,
                       int points = 16);

// Same with a radius-halving consistency check; .second is |d_h - d_{h/2}|.
std::pair<cplx, double> cauchy_derivative_checked(const std::function<cplx(cplx)>& f,
                                                  cplx k, double radius, int points = 16);

// Adaptive Simpson on [a, b] for complex integrands.
cplx adaptive_simpson(const std::function<cplx(double)>& f, double a, double b,
                      double tol, int max_depth = 48);

// Composite Simpson over uniformly spaced samples (size odd).
cplx simpson_uniform(std::span<const cplx> values, double h);

struct Extrapolation {
    cplx value;                      // last diagonal entry
    std::vector<cplx> diagonal;      // Neville diagonal per added point
    std::vector<double> increments;  // |diagonal[i] - diagonal[i-1]|
};

// Polynomial (Neville) extrapolation of samples (x_i, y_i) to x = 0.
Extrapolation extrapolate_to_zero(std::span<const double> x, std::span<const cplx> y);

}  // namespace jost::num
