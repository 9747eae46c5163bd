// Numeric radial solutions for arbitrary cutoff potentials and the Jost
// function assembled from their Wronskian.
//
// The reduced radial equation is u'' = [l(l+1)/r^2 + V(r) - k^2] u. The
// regular solution phi_l is normalized by (2l+1)!! r^{-l-1} phi_l -> 1 at
// the origin; the irregular solution f_l matches -i k r h^-_l(kr) exactly
// beyond the cutoff, so e^{ikr} f_l -> i^l.
#pragma once

#include <span>
#include <vector>

#include "jost/types.hpp"

namespace jost::radial {

struct RadialGrid {
    std::vector<double> nodes;        // output radii, strictly increasing
    std::vector<double> breakpoints;  // radii the integrator must not step across

    // nodes plus the potential's own breakpoints, cutoff included
    static RadialGrid for_potential(const Potential& pot, std::vector<double> nodes);
};

enum class SolutionKind { Regular, Irregular };

struct RadialSolution {
    SolutionKind kind;
    cplx k;
    int l;
    std::vector<double> r;
    std::vector<cplx> values;
    std::vector<cplx> derivatives;
};

inline constexpr double kDefaultTol = 1e-11;

// Start radius of the regular integration as a fraction of the cutoff.
inline constexpr double kOriginFraction = 1e-6;

// Outward integration from a two-term Frobenius start
// u = r^{l+1}/(2l+1)!! [1 + (V(0)-k^2) r^2/(4l+6)].
RadialSolution integrate_regular(const Potential& pot, int l, cplx k,
                                 const RadialGrid& grid, double tol = kDefaultTol);

// Inward integration from the cutoff with the exact exterior seed; nodes at
// or beyond the cutoff are filled from the closed form. Requires k != 0.
RadialSolution integrate_irregular(const Potential& pot, int l, cplx k,
                                   const RadialGrid& grid, double tol = kDefaultTol);

// f_l(k) = k^l W[f_l(k,.), phi_l(k,.)], evaluated at the cutoff where the
// irregular side is the exact exterior form. k = 0 only for l = 0.
cplx jost_function(const Potential& pot, int l, cplx k, double tol = kDefaultTol);

struct DerivativeResult {
    cplx value;
    double error_estimate;  // radius-halving consistency of the circle rule
};

// d f_l/dk by a 16-point Cauchy circle of radius 1e-3 max(1,|k|) (shrunk if
// it would cross k = 0 for l >= 1), with an h/2 consistency check.
DerivativeResult jost_derivative(const Potential& pot, int l, cplx k,
                                 double tol = kDefaultTol);

// Residual of d/dr W[df_l/dk, f_l] = 2 k f_l^2 at the sample radii, using
// finite differences in r and circle-rule derivatives in k. Diagnostic.
double wronskian_identity_residual(const Potential& pot, int l, cplx k,
                                   std::span<const double> r_samples,
                                   double tol = kDefaultTol);

}  // namespace jost::radial
