#include "jost/square_well.hpp"

#include <cmath>

#include "jost/specfun.hpp"

namespace jost::sw {

namespace sf = jost::specfun;

namespace {

const cplx kI{0.0, 1.0};

void check_params(const SquareWellParams& p) {
    if (!(p.V0 >= 0.0) || !std::isfinite(p.V0))
        throw std::invalid_argument("square well: V0 must be >= 0");
    if (!(p.a > 0.0) || !std::isfinite(p.a))
        throw std::invalid_argument("square well: a must be > 0");
}

void check_zero_condition(cplx k0, const SquareWellParams& p) {
    const double res = std::abs(jost_l0(k0, p));
    if (res > 1e-8 * (1.0 + std::abs(k0)))
        throw std::invalid_argument(
            "square well: k0 is not a zero of f_0 (|f_0(k0)| = " + std::to_string(res) + ")");
}

}  // namespace

cplx interior_momentum(cplx k, const SquareWellParams& p) {
    check_params(p);
    return std::sqrt(k * k + p.V0);
}

std::pair<cplx, cplx> regular_solution(int l, cplx k, const SquareWellParams& p, double r) {
    check_params(p);
    if (r < 0.0) throw std::domain_error("regular_solution: r must be >= 0");
    const cplx q = std::sqrt(k * k + p.V0);
    const double a = p.a;

    if (r <= a) {
        // q^{-l} r j_l(qr) written with the even scaled forms
        cplx rl = 1.0;
        for (int i = 0; i < l; ++i) rl *= r;
        const cplx value = rl * r * sf::jl_scaled(l, q * r);
        const cplx deriv = rl * (sf::jl_scaled(l, q * r) + sf::jl_deriv_scaled(l, q * r));
        return {value, deriv};
    }

    if (k == cplx(0.0, 0.0)) {
        if (l != 0)
            throw std::domain_error("regular_solution: k = 0 exterior requires l = 0");
        // free exterior at zero energy: straight-line continuation
        auto [pa, dpa] = regular_solution(0, k, p, a);
        return {pa + dpa * (r - a), dpa};
    }

    const cplx ka = k * a, kr = k * r;
    const double al = std::pow(a, l);
    const cplx ja = al * sf::jl_scaled(l, q * a);            // j_l(qa) / q^l
    const cplx qj = al / a * sf::jl_deriv_scaled(l, q * a);  // q^{1-l} j'_l(qa)

    // A_l = k a^2 q^{-l} [ k j_l(qa) n'_l(ka) - q j'_l(qa) n_l(ka) ]
    // B_l = k a^2 q^{-l} [ q j'_l(qa) j_l(ka) - k j_l(qa) j'_l(ka) ]
    const cplx A = k * a * a * (k * ja * sf::spherical_n_deriv(l, ka) - qj * sf::spherical_n(l, ka));
    const cplx B = k * a * a * (qj * sf::spherical_j(l, ka) - k * ja * sf::spherical_j_deriv(l, ka));

    const cplx jl = sf::spherical_j(l, kr), nl = sf::spherical_n(l, kr);
    const cplx djl = sf::spherical_j_deriv(l, kr), dnl = sf::spherical_n_deriv(l, kr);
    const cplx value = r * (A * jl + B * nl);
    const cplx deriv = (A * jl + B * nl) + r * k * (A * djl + B * dnl);
    return {value, deriv};
}

std::pair<cplx, cplx> irregular_solution(int l, cplx k, const SquareWellParams& p, double r) {
    check_params(p);
    if (!(r > 0.0)) throw std::domain_error("irregular_solution: r must be > 0");
    if (k == cplx(0.0, 0.0))
        throw std::domain_error("irregular_solution: k must be nonzero");
    const cplx q = std::sqrt(k * k + p.V0);
    if (q == cplx(0.0, 0.0))
        throw std::domain_error("irregular_solution: q must be nonzero");
    const double a = p.a;

    if (r >= a) {
        const cplx kr = k * r;
        const cplx h = sf::spherical_h_minus(l, kr);
        const cplx dh = sf::spherical_h_minus_deriv(l, kr);
        return {-kI * k * r * h, -kI * k * (h + kr * dh)};
    }

    const cplx ka = k * a, qa = q * a;
    const cplx h = sf::spherical_h_minus(l, ka);
    const cplx dh = sf::spherical_h_minus_deriv(l, ka);
    const cplx C = -kI * k * q * a * a *
                   (q * h * sf::spherical_n_deriv(l, qa) - k * dh * sf::spherical_n(l, qa));
    const cplx D = kI * k * q * a * a *
                   (q * h * sf::spherical_j_deriv(l, qa) - k * dh * sf::spherical_j(l, qa));

    const cplx qr = q * r;
    const cplx jl = sf::spherical_j(l, qr), nl = sf::spherical_n(l, qr);
    const cplx djl = sf::spherical_j_deriv(l, qr), dnl = sf::spherical_n_deriv(l, qr);
    const cplx value = r * (C * jl + D * nl);
    const cplx deriv = (C * jl + D * nl) + r * q * (C * djl + D * dnl);
    return {value, deriv};
}

cplx jost(int l, cplx k, const SquareWellParams& p) {
    check_params(p);
    if (k == cplx(0.0, 0.0)) {
        if (l != 0) throw std::domain_error("jost: k = 0 requires l = 0");
        return std::cos(std::sqrt(p.V0) * p.a);
    }
    const cplx q = std::sqrt(k * k + p.V0);
    const double a = p.a;
    const cplx ka = k * a, qa = q * a;

    // (k/q)^l [ k j_l(qa) h^-' - q j'_l(qa) h^- ]
    //   = k^{l+1} a^l (j_l(qa)/(qa)^l) h^-' - k^l a^{l-1} (j'_l(qa)/(qa)^{l-1}) h^-
    const cplx jls = sf::jl_scaled(l, qa);
    const cplx jds = sf::jl_deriv_scaled(l, qa);
    const cplx h = sf::spherical_h_minus(l, ka);
    const cplx dh = sf::spherical_h_minus_deriv(l, ka);

    cplx kl = 1.0, al = 1.0;
    for (int i = 0; i < l; ++i) {
        kl *= k;
        al *= a;
    }
    return kI * k * a * a * (k * kl * al * jls * dh - kl * (al / a) * jds * h);
}

cplx jost_l0(cplx k, const SquareWellParams& p) {
    check_params(p);
    const cplx q = std::sqrt(k * k + p.V0);
    const double a = p.a;
    const cplx qa = q * a;
    // sin(qa)/q stays finite as q -> 0 via the scaled series
    const cplx sin_over_q = a * sf::jl_scaled(0, qa);
    return std::exp(-kI * k * a) * (kI * k * sin_over_q + std::cos(qa));
}

cplx jost_l0_minus(cplx k0, const SquareWellParams& p) {
    check_zero_condition(k0, p);
    if (k0 == cplx(0.0, 0.0))
        throw std::domain_error("jost_l0_minus: k0 = 0 threshold zero not supported");
    const cplx q0 = std::sqrt(k0 * k0 + p.V0);
    return -2.0 * kI * k0 / q0 * std::exp(kI * k0 * p.a) * std::sin(q0 * p.a);
}

cplx jost_l0_deriv_at_zero(cplx k0, const SquareWellParams& p) {
    check_zero_condition(k0, p);
    const cplx q0 = std::sqrt(k0 * k0 + p.V0);
    const cplx q03 = q0 * q0 * q0;
    return kI * (q0 * q0 - k0 * k0) / q03 * (1.0 + kI * k0 * p.a) *
           std::exp(-kI * k0 * p.a) * std::sin(q0 * p.a);
}

cplx pseudonorm_l0(cplx k0, const SquareWellParams& p) {
    check_zero_condition(k0, p);
    if (k0 == cplx(0.0, 0.0))
        throw std::domain_error("pseudonorm_l0: threshold zero k0 = 0 excluded");
    const cplx q0 = std::sqrt(k0 * k0 + p.V0);
    const cplx q04 = q0 * q0 * q0 * q0;
    const cplx s = std::sin(q0 * p.a);
    return (1.0 + kI * k0 * p.a) / (2.0 * kI * k0) * (q0 * q0 - k0 * k0) / q04 * s * s;
}

}  // namespace jost::sw
