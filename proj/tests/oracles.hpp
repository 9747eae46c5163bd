// Test-only reference computations, deliberately independent of the library
// code paths they check.
#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace oracles {

using cplx = std::complex<double>;

// root of f on [lo, hi] by plain bisection; f(lo) and f(hi) must bracket
double bisect(const std::function<double(double)>& f, double lo, double hi);

// interior momentum of the l = 0 square-well bound state (k0 = -i kappa):
// kappa sin(q a) + q cos(q a) = 0 with q^2 + kappa^2 = V0
double bound_state_q(double V0, double a);

// same for the virtual state (k0 = +i kappa): kappa sin(q a) = q cos(q a)
double virtual_state_q(double V0, double a);

// cos and sin by their power series
double series_cos(double x);
double series_sin(double x);

// minimum-modulus scan of |f| over a lattice, each candidate refined by a
// secant-like complex Newton with finite-difference derivatives
std::vector<cplx> scan_zeros(const std::function<cplx(cplx)>& f, double re_lo,
                             double re_hi, double im_lo, double im_hi, int n_re,
                             int n_im);

// (2l+1)!! by a product loop
unsigned long long dfac_product(int l);

}  // namespace oracles
