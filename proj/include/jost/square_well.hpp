// Closed forms for the square well V(r) = -V0 on [0, a]: regular and
// irregular radial solutions, the Jost function, and the l = 0
// specializations down to the pseudonorm. These are exact references the
// numeric engine is tested against.
#pragma once

#include <utility>

#include "jost/types.hpp"

namespace jost::sw {

struct SquareWellParams {
    double V0;  // depth >= 0 (0 = free particle)
    double a;   // cutoff radius > 0
};

// Interior momentum q = sqrt(k^2 + V0), principal branch. Every formula
// below is even in q, so the branch never matters.
cplx interior_momentum(cplx k, const SquareWellParams& p);

// phi_l(k, r) and d/dr phi_l. Interior: q^{-l} r j_l(qr). Exterior:
// r [A_l j_l(kr) + B_l n_l(kr)], continuous with its derivative at r = a.
// Exterior with k = 0 is only defined for l = 0 (linear matching).
std::pair<cplx, cplx> regular_solution(int l, cplx k, const SquareWellParams& p, double r);

// f_l(k, r) and d/dr f_l. Interior: r [C_l j_l(qr) + D_l n_l(qr)].
// Exterior: -i k r h^-_l(kr). Requires r > 0, k != 0, q != 0.
std::pair<cplx, cplx> irregular_solution(int l, cplx k, const SquareWellParams& p, double r);

// f_l(k) = (k/q)^l i k a^2 [k j_l(qa) h^-'_l(ka) - q j'_l(qa) h^-_l(ka)].
// k = 0 is allowed for l = 0 (limit cos(sqrt(V0) a)).
cplx jost(int l, cplx k, const SquareWellParams& p);

// l = 0 reduction f_0(k) = e^{-ika} (i k sin(qa)/q + cos(qa)).
cplx jost_l0(cplx k, const SquareWellParams& p);

// The three zero-conditioned l = 0 forms; each checks that k0 is a zero of
// f_0 within |f_0(k0)| <= 1e-8 (1 + |k0|) and throws std::invalid_argument
// otherwise.
//   f_0(-k0)      = -(2 i k0 / q0) e^{i k0 a} sin(q0 a)
//   df_0/dk (k0)  = i (q0^2 - k0^2)/q0^3 (1 + i k0 a) e^{-i k0 a} sin(q0 a)
//   int phi_0^2   = (1 + i k0 a)/(2 i k0) (q0^2 - k0^2)/q0^4 sin^2(q0 a)
cplx jost_l0_minus(cplx k0, const SquareWellParams& p);
cplx jost_l0_deriv_at_zero(cplx k0, const SquareWellParams& p);
cplx pseudonorm_l0(cplx k0, const SquareWellParams& p);

}  // namespace jost::sw
