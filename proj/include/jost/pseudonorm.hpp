// The pseudonorm of a Jost-zero state: the value the analytic continuation
// assigns to the divergent integral of phi_l^2 over [0, inf).
//
// Closed route:      N = f'_l(k0) f_l(-k0) / (4 i k0^{2l+2})
// Quadrature route:  N_eps = int phi_l^2 e^{-eps r^2} dr, extrapolated
//                    eps -> 0 over a geometric schedule (Gaussian damping
//                    in the Zel'dovich style).
//
// The two routes agree for bound states and for resonances with
// |Re k0| > Im k0. On the positive imaginary axis (virtual states) the
// damped integral grows like eps^{-1/2} e^{(Im k0)^2/eps} as eps -> 0 and
// the quadrature route reports non-convergence; the finite-interval
// surface-corrected identity below covers that sector instead.
#pragma once

#include "jost/poles.hpp"
#include "jost/types.hpp"

namespace jost::pnorm {

struct RegulatorSchedule {
    double eps0;            // largest damping strength, 1/length^2
    double ratio = 0.5;     // geometric factor in (0,1)
    int count = 8;          // >= 3 so the extrapolation has a tableau
    double tail = 1e-16;    // quadrature windows end once the damped
                            // integrand falls below this (relative)

    static RegulatorSchedule for_cutoff(double R);  // eps0 = 0.5/R^2
};

// Closed formula at a refined zero. Preconditions: |f(k0)| <= 1e-8 (1+|k0|),
// k0 != 0, and |f'(k0)| above 1e-12 (a smaller derivative is treated as a
// suspected multiple zero and refused).
cplx formula(const poles::JostEvaluator& f, cplx k0);

struct RegularizedResult {
    cplx value;
    double error_estimate;           // last extrapolation increment
    std::vector<double> eps;         // the schedule actually used
    std::vector<cplx> damped_values; // N_eps per schedule point
};

// Raised when the eps -> 0 extrapolation does not settle; carries the table.
class RegularizationError : public ComputationError {
public:
    RegularizationError(const std::string& what, RegularizedResult table)
        : ComputationError(what), table(std::move(table)) {}
    RegularizedResult table;
};

// Gaussian-damped quadrature of the numeric phi_l^2 plus extrapolation.
// The exterior tail is integrated on a ray rotated into the sector where
// the damped integrand decays (the value of N_eps is unchanged, the
// quadrature just avoids the e^{(Im k0)^2/eps} cancellation).
RegularizedResult regularized(const Potential& pot, int l, cplx k0,
                              const RegulatorSchedule& schedule, double tol = 1e-11);

// Plain convergent quadrature of phi_l^2; bound states only (Im k0 < 0).
cplx direct_quadrature(const Potential& pot, int l, cplx k0, double tol = 1e-11);

// Finite-interval identity: for any beta past the cutoff,
//   N = int_0^beta phi^2 dr + f(-k0) W[df/dk(k0,.), phi(k0,.)](beta) / (4 i k0^{l+2}).
// Fully numeric (ODE solutions plus a circle rule in k), valid for every
// pole class including virtual states.
cplx surface_corrected(const Potential& pot, int l, cplx k0, double beta,
                       double tol = 1e-11);

// C(k0) = -2 i k0^{l+1} / f(-k0), the constant with f_l(k0,r) = C phi_l(k0,r).
cplx proportionality_constant(const poles::JostEvaluator& f, cplx k0);

// [4 i k0^{2l+2} / (f'(k0) f(-k0))]^{1/2} = pseudonorm^{-1/2}, principal branch.
cplx normalization_constant(const poles::JostEvaluator& f, cplx k0);

// psi_l(k0, r) = normalization_constant * phi_l(k0, r).
cplx normalized_state(const Potential& pot, int l, cplx k0, double r,
                      double tol = 1e-11);

}  // namespace jost::pnorm
