#include "jost/specfun.hpp"

#include <cmath>

namespace jost::specfun {

namespace {

constexpr double kSeriesSwitch = 0.5;   // |z| below which the power series is used
constexpr double kExpArgLimit = 700.0;  // e^{|Im z|} representability

const cplx kI{0.0, 1.0};

void check_range(cplx z) {
    if (std::abs(z.imag()) > kExpArgLimit)
        throw std::range_error("specfun: |Im z| too large, e^{|Im z|} overflows");
}

void check_l(int l) {
    if (l < 0) throw std::invalid_argument("specfun: l must be >= 0");
    if (l > 60) throw std::invalid_argument("specfun: l > 60 not supported");
}

// j_l(z)/z^l = sum_m (-z^2/2)^m / (m! (2l+2m+1)!!)
cplx jl_scaled_series(int l, cplx z) {
    const cplx w = -0.5 * z * z;
    cplx term = 1.0 / double_factorial_odd_d(l);
    cplx sum = term;
    for (int m = 1; m < 60; ++m) {
        term *= w / (static_cast<double>(m) * (2.0 * l + 2.0 * m + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// j'_l(z)/z^{l-1} = sum_m (2m+l) (-z^2/2)^m / (m! (2l+2m+1)!!)
cplx jl_deriv_scaled_series(int l, cplx z) {
    const cplx w = -0.5 * z * z;
    cplx term = 1.0 / double_factorial_odd_d(l);
    cplx sum = static_cast<double>(l) * term;
    for (int m = 1; m < 60; ++m) {
        term *= w / (static_cast<double>(m) * (2.0 * l + 2.0 * m + 1.0));
        sum += static_cast<double>(2 * m + l) * term;
        if (std::abs(term) * (2 * m + l) < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    return sum;
}

cplx j0_closed(cplx z) { return std::sin(z) / z; }
cplx j1_closed(cplx z) { return std::sin(z) / (z * z) - std::cos(z) / z; }
cplx j2_closed(cplx z) {
    return (3.0 / (z * z) - 1.0) * std::sin(z) / z - 3.0 * std::cos(z) / (z * z);
}

// Downward recurrence f_{n-1} = (2n+1)/z f_n - f_{n+1}, normalized by j_0
// or j_1 (whichever is larger in modulus).
cplx jl_recurrence(int l, cplx z) {
    const int start = l + 16 + static_cast<int>(std::abs(z));
    cplx fp = 0.0, fc = 1e-280;
    cplx at_l = 0.0, at1 = 0.0, at0 = 0.0;
    for (int n = start; n >= 1; --n) {
        const cplx fm = (2.0 * n + 1.0) / z * fc - fp;
        fp = fc;
        fc = fm;
        if (n - 1 == l) at_l = fc;
        if (n - 1 == 1) at1 = fc;
        if (n - 1 == 0) at0 = fc;
    }
    const cplx j0 = j0_closed(z), j1 = j1_closed(z);
    const cplx scale = (std::abs(at0) >= std::abs(at1)) ? j0 / at0 : j1 / at1;
    return at_l * scale;
}

cplx n0_closed(cplx z) { return -std::cos(z) / z; }
cplx n1_closed(cplx z) { return -std::cos(z) / (z * z) - std::sin(z) / z; }

// Upward recurrence is stable for n_l and h^-_l (both carry the z^{-l-1}
// dominant component).
template <class F0, class F1>
cplx upward(int l, cplx z, F0 f0, F1 f1) {
    cplx a = f0(z);
    if (l == 0) return a;
    cplx b = f1(z);
    for (int n = 1; n < l; ++n) {
        const cplx c = (2.0 * n + 1.0) / z * b - a;
        a = b;
        b = c;
    }
    return b;
}

cplx h0_closed(cplx z) { return kI * std::exp(-kI * z) / z; }
cplx h1_closed(cplx z) { return std::exp(-kI * z) * (kI - z) / (z * z); }

cplx hp0_closed(cplx z) { return -kI * std::exp(kI * z) / z; }
cplx hp1_closed(cplx z) { return -std::exp(kI * z) * (kI + z) / (z * z); }

void check_nonzero(cplx z, const char* who) {
    if (z == cplx(0.0, 0.0))
        throw std::domain_error(std::string(who) + ": singular at z = 0");
}

}  // namespace

cplx spherical_j(int l, cplx z) {
    check_l(l);
    check_range(z);
    if (std::abs(z) < kSeriesSwitch) {
        cplx zl = 1.0;
        for (int i = 0; i < l; ++i) zl *= z;
        return zl * jl_scaled_series(l, z);
    }
    switch (l) {
        case 0: return j0_closed(z);
        case 1: return j1_closed(z);
        case 2: return j2_closed(z);
        default: return jl_recurrence(l, z);
    }
}

cplx spherical_n(int l, cplx z) {
    check_l(l);
    check_range(z);
    check_nonzero(z, "spherical_n");
    return upward(l, z, n0_closed, n1_closed);
}

cplx spherical_h_minus(int l, cplx z) {
    check_l(l);
    check_range(z);
    check_nonzero(z, "spherical_h_minus");
    return upward(l, z, h0_closed, h1_closed);
}

cplx spherical_h_plus(int l, cplx z) {
    check_l(l);
    check_range(z);
    check_nonzero(z, "spherical_h_plus");
    return upward(l, z, hp0_closed, hp1_closed);
}

cplx spherical_j_deriv(int l, cplx z) {
    check_l(l);
    check_range(z);
    if (std::abs(z) < kSeriesSwitch) {
        cplx zl = 1.0;
        for (int i = 0; i + 1 < l; ++i) zl *= z;
        if (l == 0) return -spherical_j(1, z);
        return zl * jl_deriv_scaled_series(l, z);
    }
    if (l == 0) return -spherical_j(1, z);
    return spherical_j(l - 1, z) - (l + 1.0) / z * spherical_j(l, z);
}

cplx spherical_n_deriv(int l, cplx z) {
    check_l(l);
    check_nonzero(z, "spherical_n_deriv");
    if (l == 0) return -spherical_n(1, z);
    return spherical_n(l - 1, z) - (l + 1.0) / z * spherical_n(l, z);
}

cplx spherical_h_minus_deriv(int l, cplx z) {
    check_l(l);
    check_nonzero(z, "spherical_h_minus_deriv");
    if (l == 0) return -spherical_h_minus(1, z);
    return spherical_h_minus(l - 1, z) - (l + 1.0) / z * spherical_h_minus(l, z);
}

cplx spherical_h_plus_deriv(int l, cplx z) {
    check_l(l);
    check_nonzero(z, "spherical_h_plus_deriv");
    if (l == 0) return -spherical_h_plus(1, z);
    return spherical_h_plus(l - 1, z) - (l + 1.0) / z * spherical_h_plus(l, z);
}

cplx jl_scaled(int l, cplx z) {
    check_l(l);
    check_range(z);
    if (std::abs(z) < kSeriesSwitch) return jl_scaled_series(l, z);
    cplx zl = 1.0;
    for (int i = 0; i < l; ++i) zl *= z;
    return spherical_j(l, z) / zl;
}

cplx jl_deriv_scaled(int l, cplx z) {
    check_l(l);
    check_range(z);
    if (std::abs(z) < kSeriesSwitch) return jl_deriv_scaled_series(l, z);
    cplx zl = 1.0;
    for (int i = 0; i + 1 < l; ++i) zl *= z;
    if (l == 0) return -spherical_j(1, z) * z;
    return spherical_j_deriv(l, z) / zl;
}

SphericalTriple SphericalTriple::at(int l, cplx z) {
    const cplx j = spherical_j(l, z);
    const cplx n = spherical_n(l, z);
    return SphericalTriple{j, n, j - kI * n};
}

std::uint64_t double_factorial_odd(int l) {
    check_l(l);
    if (l > 16)
        throw std::overflow_error("double_factorial_odd: (2l+1)!! exceeds 64 bits for l > 16");
    std::uint64_t acc = 1;
    for (int m = 3; m <= 2 * l + 1; m += 2) acc *= static_cast<std::uint64_t>(m);
    return acc;
}

double double_factorial_odd_d(int l) {
    double acc = 1.0;
    for (int m = 3; m <= 2 * l + 1; m += 2) acc *= m;
    return acc;
}

}  // namespace jost::specfun
