#include <cmath>
#include <complex>

#include "doctest.h"
#include "jost/types.hpp"
#include "oracles.hpp"

using jost::cplx;
using jost::PoleClass;

TEST_CASE("classify: the three taxonomy sectors") {
    // derived bound/virtual positions for V0 = 4 and V0 = 2 square wells
    const double kb = std::sqrt(4.0 - std::pow(oracles::bound_state_q(4.0, 1.0), 2));
    const double kv = std::sqrt(2.0 - std::pow(oracles::virtual_state_q(2.0, 1.0), 2));
    CHECK(kb == doctest::Approx(0.638045048285238).epsilon(1e-12));
    CHECK(kv == doctest::Approx(0.252127077153137).epsilon(1e-12));

    CHECK(jost::classify(cplx(0.0, -kb), 1e-8) == PoleClass::Bound);
    CHECK(jost::classify(cplx(0.0, kv), 1e-8) == PoleClass::Virtual);
    CHECK(jost::classify(cplx(3.9, 1.6), 1e-8) == PoleClass::Resonant);
    CHECK(jost::classify(cplx(0.0, 0.0), 1e-8) == PoleClass::Bound);  // threshold edge
}

TEST_CASE("classify: errors") {
    CHECK_THROWS_AS(jost::classify(cplx(1.0, -1.0), 1e-8), std::domain_error);
    CHECK_THROWS_AS(jost::classify(cplx(1.0, 1.0), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(jost::classify(cplx(1.0 / 0.0, 0.0), 1e-8), std::invalid_argument);
}

TEST_CASE("classify: stable under small relative perturbations") {
    const cplx samples[] = {{0.0, -0.638}, {0.0, 0.25}, {3.9, 1.65}, {-3.9, 1.65}};
    const double tol = 1e-8;
    for (cplx k0 : samples) {
        const auto base = jost::classify(k0, tol);
        for (double d : {-2e-9, 1e-9, 2e-9}) {
            // axis points perturbed along the axis, off-axis points freely
            const cplx p = k0.real() == 0.0 ? k0 * (1.0 + d) : k0 + cplx(d, d);
            CHECK(jost::classify(p, tol) == base);
        }
    }
}

TEST_CASE("classify: mirror resonances share a class") {
    for (cplx k0 : {cplx(3.92, 1.64), cplx(0.4, 0.01), cplx(7.3, 2.1)}) {
        CHECK(jost::classify(k0, 1e-8) == PoleClass::Resonant);
        CHECK(jost::classify(-std::conj(k0), 1e-8) == PoleClass::Resonant);
    }
}

TEST_CASE("Potential: square well") {
    const auto pot = jost::Potential::square_well(4.0, 1.0);
    CHECK(pot(0.0) == -4.0);
    CHECK(pot(0.999) == -4.0);
    CHECK(pot(1.0) == 0.0);
    CHECK(pot(5.0) == 0.0);
    CHECK(pot.cutoff() == 1.0);
    CHECK_FALSE(pot.is_free());
    CHECK(jost::Potential::square_well(0.0, 1.0).is_free());
    CHECK_THROWS_AS(jost::Potential::square_well(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(jost::Potential::square_well(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("Potential: piecewise constant") {
    const auto pot = jost::Potential::piecewise_constant({0.5, 1.0, 2.0}, {-3.0, -1.0, 0.5}, 2.0);
    CHECK(pot(0.25) == -3.0);
    CHECK(pot(0.75) == -1.0);
    CHECK(pot(1.5) == 0.5);
    CHECK(pot(2.0) == 0.0);
    CHECK(pot.breakpoints().back() == 2.0);
    CHECK_THROWS_AS(jost::Potential::piecewise_constant({1.0, 0.5}, {1.0, 2.0}, 2.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(jost::Potential::piecewise_constant({1.0}, {1.0, 2.0}, 2.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(jost::Potential::piecewise_constant({3.0}, {1.0}, 2.0),
                    std::invalid_argument);
}

TEST_CASE("Potential: sampled interpolation hits the nodes and stays monotone") {
    std::vector<double> grid, vals;
    for (int i = 0; i <= 40; ++i) {
        const double r = 4.0 * i / 40;
        grid.push_back(r);
        vals.push_back(-3.0 * std::exp(-r * r));
    }
    const auto pot = jost::Potential::sampled(grid, vals, 4.0);
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (grid[i] < 4.0) CHECK(pot(grid[i]) == doctest::Approx(vals[i]).epsilon(1e-14));
    // interpolant of a monotone rise must not overshoot
    for (double r = 0.05; r < 3.95; r += 0.01) {
        CHECK(pot(r) <= 1e-12);
        CHECK(pot(r) >= -3.0);
    }
    CHECK(pot(4.0) == 0.0);
    CHECK(pot(7.0) == 0.0);
}

TEST_CASE("units note travels with the library") {
    CHECK(std::string(jost::kUnitsNote).find("hbar^2/2m = 1") != std::string::npos);
}
