// Spherical Bessel, Neumann and incoming Hankel functions of complex
// argument, plus the Wronskian helper used to assemble Jost functions.
#pragma once

#include <cstdint>

#include "jost/types.hpp"

namespace jost::specfun {

// j_l(z). Entire in z; evaluated by power series for small |z|, closed
// forms for l <= 2, downward recurrence with renormalization above.
cplx spherical_j(int l, cplx z);

// n_l(z), singular at z = 0 (std::domain_error there).
cplx spherical_n(int l, cplx z);

// h^-_l(z) = j_l(z) - i n_l(z) ~ i^{l+1} e^{-iz}/z. Evaluated directly
// (closed forms + upward recurrence) to avoid the j - i n cancellation.
cplx spherical_h_minus(int l, cplx z);

// h^+_l(z) = j_l(z) + i n_l(z) ~ (-i)^{l+1} e^{iz}/z, the partner solution
// used when matching a radial solution onto free in/outgoing waves.
cplx spherical_h_plus(int l, cplx z);

// d/dz of the above, via f'_l = f_{l-1} - (l+1)/z f_l.
cplx spherical_j_deriv(int l, cplx z);
cplx spherical_n_deriv(int l, cplx z);
cplx spherical_h_minus_deriv(int l, cplx z);
cplx spherical_h_plus_deriv(int l, cplx z);

// j_l(z)/z^l and j'_l(z)/z^{l-1}: even functions of z, finite at z = 0.
// These carry the well formulas through q -> 0 and fix the branch ambiguity
// of q = sqrt(k^2 + V0) (only q^2 enters).
cplx jl_scaled(int l, cplx z);
cplx jl_deriv_scaled(int l, cplx z);

struct SphericalTriple {
    cplx j;
    cplx n;
    cplx h_minus;  // j - i n by construction

    static SphericalTriple at(int l, cplx z);
};

// W[u, v] = u v' - u' v. Orientation is fixed so that the free-particle
// Jost function k^l W[f_l, phi_l] equals 1.
inline cplx wronskian(cplx u, cplx du, cplx v, cplx dv) { return u * dv - du * v; }

// (2l+1)!!; exact in 64 bits up to l = 16, std::overflow_error beyond.
std::uint64_t double_factorial_odd(int l);

// (2l+1)!! as a double, for series prefactors at larger l.
double double_factorial_odd_d(int l);

}  // namespace jost::specfun
