// Shared value types: units convention, momenta, potentials, pole taxonomy.
#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace jost {

using cplx = std::complex<double>;

// Everything in the library uses hbar^2/(2m) = 1, so E = k^2 and the
// interior momentum of a well of depth V0 satisfies q^2 = k^2 + V0.
inline constexpr const char* kUnitsNote = "hbar^2/2m = 1; E = k^2";

// Raised when a numeric routine cannot deliver its contract; carries a
// human-readable diagnostic.
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Half-plane taxonomy of Jost-function zeros:
//   bound    Re k0 = 0, Im k0 <= 0
//   virtual  Re k0 = 0, Im k0 >  0
//   resonant Re k0 != 0, Im k0 > 0
enum class PoleClass { Bound, Virtual, Resonant };

const char* to_string(PoleClass c);

// Classify a Jost zero. The axis test is relative: |Re k0| < tol*(1+|k0|).
// A zero off the axis in the lower half plane has no name in this taxonomy
// and raises std::domain_error.
PoleClass classify(cplx k0, double tol);

// A short-range radial potential with a hard cutoff: V(r) = 0 for r >= cutoff.
// Three shapes are supported:
//   square well        V(r) = -depth on [0, radius]
//   piecewise constant values[i] on [breakpoints[i-1], breakpoints[i])
//   sampled            monotone (Fritsch-Carlson) cubic through (grid, values)
class Potential {
public:
    static Potential square_well(double depth, double radius);
    static Potential piecewise_constant(std::vector<double> breakpoints,
                                        std::vector<double> values,
                                        double cutoff);
    static Potential sampled(std::vector<double> grid,
                             std::vector<double> values,
                             double cutoff);

    double operator()(double r) const;
    double cutoff() const { return cutoff_; }

    // Radii the integrator must not step across (discontinuities and
    // interpolation nodes). Sorted, within (0, cutoff], cutoff included.
    const std::vector<double>& breakpoints() const { return breakpoints_; }

    bool is_free() const;

    enum class Kind { SquareWell, PiecewiseConstant, Sampled };
    Kind kind() const { return kind_; }
    double well_depth() const;   // SquareWell only
    double well_radius() const;  // SquareWell only
    const std::vector<double>& segment_edges() const { return edges_; }
    const std::vector<double>& segment_values() const { return values_; }

private:
    Potential() = default;

    Kind kind_ = Kind::SquareWell;
    double cutoff_ = 0.0;
    std::vector<double> breakpoints_;
    // piecewise-constant representation
    std::vector<double> edges_;   // right edges of constant segments
    std::vector<double> values_;  // one value per segment
    // sampled representation (cubic Hermite with monotone slopes)
    std::vector<double> grid_;
    std::vector<double> samples_;
    std::vector<double> slopes_;
};

}  // namespace jost
