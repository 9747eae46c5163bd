#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "jost/specfun.hpp"
#include "oracles.hpp"

using jost::cplx;
namespace sf = jost::specfun;

namespace {
const cplx I{0.0, 1.0};

std::mt19937 rng_for(const char* tag) {
    std::seed_seq seq(tag, tag + std::char_traits<char>::length(tag));
    return std::mt19937(seq);
}

cplx random_z(std::mt19937& rng, double lo, double hi) {
    std::uniform_real_distribution<double> mag(lo, hi);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * 3.141592653589793);
    const double m = mag(rng), a = ang(rng);
    return {m * std::cos(a), m * std::sin(a)};
}
}  // namespace

TEST_CASE("spherical_j at and near the origin") {
    CHECK(sf::spherical_j(0, cplx(0.0, 0.0)) == cplx(1.0, 0.0));
    CHECK(sf::spherical_j(1, cplx(0.0, 0.0)) == cplx(0.0, 0.0));
    CHECK(sf::spherical_j(5, cplx(0.0, 0.0)) == cplx(0.0, 0.0));
    CHECK(std::abs(sf::spherical_j(0, cplx(1e-9, 0.0)) - 1.0) < 1e-15);

    // l=1, z=0.5 against the closed form evaluated with series sin/cos
    const double z = 0.5;
    const double expect = oracles::series_sin(z) / (z * z) - oracles::series_cos(z) / z;
    CHECK(expect == doctest::Approx(0.16253703).epsilon(1e-7));
    CHECK(std::abs(sf::spherical_j(1, cplx(z, 0.0)) - expect) < 1e-15);
}

TEST_CASE("spherical_n closed forms and singularity") {
    CHECK(std::abs(sf::spherical_n(0, cplx(1.0, 0.0)) - (-oracles::series_cos(1.0))) < 1e-15);
    CHECK_THROWS_AS(sf::spherical_n(0, cplx(0.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(sf::spherical_h_minus(2, cplx(0.0, 0.0)), std::domain_error);
}

TEST_CASE("h_minus closed identity h0 = i e^{-iz}/z") {
    auto rng = rng_for("hminus");
    for (int i = 0; i < 25; ++i) {
        const cplx z = random_z(rng, 0.3, 8.0);
        const cplx expect = I * std::exp(-I * z) / z;
        CHECK(std::abs(sf::spherical_h_minus(0, z) - expect) < 1e-13 * std::abs(expect));
        // and the triple keeps h = j - i n exactly
        const auto t = sf::SphericalTriple::at(0, z);
        CHECK(t.h_minus == t.j - I * t.n);
    }
}

TEST_CASE("cross identity j_l n_{l-1} - j_{l-1} n_l = 1/z^2") {
    auto rng = rng_for("cross");
    for (int i = 0; i < 100; ++i) {
        const cplx z = random_z(rng, 0.1, 20.0);
        const int l = 1 + static_cast<int>(i % 6);
        const cplx lhs = sf::spherical_j(l, z) * sf::spherical_n(l - 1, z) -
                         sf::spherical_j(l - 1, z) * sf::spherical_n(l, z);
        const cplx rhs = 1.0 / (z * z);
        CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(rhs));
    }
}

namespace {

// test-local power series for j_l, used against the library's closed forms
cplx jl_series_ref(int l, cplx z) {
    double dfac = 1.0;
    for (int m = 3; m <= 2 * l + 1; m += 2) dfac *= m;
    cplx term = 1.0 / dfac, sum = term;
    const cplx w = -0.5 * z * z;
    for (int m = 1; m < 80; ++m) {
        term *= w / (m * (2.0 * l + 2.0 * m + 1.0));
        sum += term;
        if (std::abs(term) < 1e-19 * std::abs(sum)) break;
    }
    cplx zl = 1.0;
    for (int p = 0; p < l; ++p) zl *= z;
    return zl * sum;
}

}  // namespace

TEST_CASE("series and closed-form/recurrence agree on the overlap band") {
    auto rng = rng_for("band");
    // 0.5 < |z| < 1: library takes closed forms / downward recurrence,
    // reference is the independent series
    for (int i = 0; i < 60; ++i) {
        const cplx z = random_z(rng, 0.51, 1.0);
        for (int l = 0; l <= 6; ++l) {
            const cplx ref = jl_series_ref(l, z);
            CHECK(std::abs(sf::spherical_j(l, z) - ref) <=
                  1e-12 * (std::abs(ref) + 1e-30));
        }
    }
    // 0.3 < |z| < 0.5: library takes the series, reference is the closed form
    for (int i = 0; i < 60; ++i) {
        const cplx z = random_z(rng, 0.3, 0.49);
        const cplx j0c = std::sin(z) / z;
        const cplx j1c = std::sin(z) / (z * z) - std::cos(z) / z;
        const cplx j2c = (3.0 / (z * z) - 1.0) * std::sin(z) / z - 3.0 * std::cos(z) / (z * z);
        CHECK(std::abs(sf::spherical_j(0, z) - j0c) <= 1e-12 * std::abs(j0c));
        CHECK(std::abs(sf::spherical_j(1, z) - j1c) <= 1e-12 * std::abs(j1c) + 1e-16);
        CHECK(std::abs(sf::spherical_j(2, z) - j2c) <= 1e-11 * std::abs(j2c) + 1e-16);
    }
}

TEST_CASE("h_minus asymptotics z h e^{ iz} i^{-(l+1)} -> 1 on the real axis") {
    for (int l = 0; l <= 3; ++l) {
        const cplx il1 = std::pow(I, cplx(l + 1.0));
        for (double z : {50.0, 100.0}) {
            const cplx v = cplx(z) * sf::spherical_h_minus(l, cplx(z)) * std::exp(I * cplx(z)) / il1;
            CHECK(std::abs(v - 1.0) < (z == 50.0 ? 1e-3 : 1e-4));
        }
    }
}

TEST_CASE("derivatives are consistent with central differences") {
    auto rng = rng_for("deriv");
    for (int i = 0; i < 30; ++i) {
        const cplx z = random_z(rng, 0.6, 10.0);
        const double h = 1e-6;
        for (int l = 0; l <= 4; ++l) {
            const cplx dj = (sf::spherical_j(l, z + h) - sf::spherical_j(l, z - h)) / (2.0 * h);
            CHECK(std::abs(sf::spherical_j_deriv(l, z) - dj) < 1e-8 * (1.0 + std::abs(dj)));
            const cplx dn = (sf::spherical_n(l, z + h) - sf::spherical_n(l, z - h)) / (2.0 * h);
            CHECK(std::abs(sf::spherical_n_deriv(l, z) - dn) < 1e-8 * (1.0 + std::abs(dn)));
            const cplx dh = (sf::spherical_h_plus(l, z + h) - sf::spherical_h_plus(l, z - h)) / (2.0 * h);
            CHECK(std::abs(sf::spherical_h_plus_deriv(l, z) - dh) < 1e-8 * (1.0 + std::abs(dh)));
        }
    }
}

TEST_CASE("wronskian orientation and bilinearity") {
    CHECK(sf::wronskian(cplx(2.0, 1.0), cplx(0.5, 0.0), cplx(2.0, 1.0), cplx(0.5, 0.0)) ==
          cplx(0.0, 0.0));

    // free l = 0 pair u = e^{-ikr}, v = sin(kr)/k gives exactly 1
    auto rng = rng_for("wronski");
    for (int i = 0; i < 20; ++i) {
        const cplx k = random_z(rng, 0.2, 3.0);
        const double r = 0.1 + 2.0 * (i + 1) / 21.0;
        const cplx u = std::exp(-I * k * r), du = -I * k * u;
        const cplx v = std::sin(k * r) / k, dv = std::cos(k * r);
        CHECK(std::abs(sf::wronskian(u, du, v, dv) - 1.0) < 1e-13);

        const cplx alpha{1.7, -0.3};
        CHECK(std::abs(sf::wronskian(alpha * u, alpha * du, v, dv) -
                       alpha * sf::wronskian(u, du, v, dv)) < 1e-13 * std::abs(alpha));
    }
}

TEST_CASE("double factorial") {
    CHECK(sf::double_factorial_odd(0) == 1);
    CHECK(sf::double_factorial_odd(2) == 15);
    CHECK(sf::double_factorial_odd(10) == 13749310575ULL);
    for (int l = 0; l <= 16; ++l)
        CHECK(sf::double_factorial_odd(l) == oracles::dfac_product(l));
    CHECK_THROWS_AS(sf::double_factorial_odd(17), std::overflow_error);
    CHECK_THROWS_AS(sf::double_factorial_odd(-1), std::invalid_argument);
}

TEST_CASE("overflow range guard") {
    CHECK_THROWS_AS(sf::spherical_j(0, cplx(0.0, 800.0)), std::range_error);
    CHECK_THROWS_AS(sf::spherical_h_minus(1, cplx(1.0, -750.0)), std::range_error);
}
