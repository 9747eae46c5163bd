// Locating Jost-function zeros in a rectangle of the complex k plane:
// argument-principle counting on the boundary, recursive subdivision, and
// Newton refinement from cell centers.
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jost/square_well.hpp"
#include "jost/types.hpp"

namespace jost::poles {

struct ScanRegion {
    double re_min, re_max;
    double im_min, im_max;
    int max_depth = 12;
    double newton_tol = 1e-12;
    // dilation applied (as a fraction of the box extents) when a zero sits
    // too close to a contour; also the width of the "boundary-uncertain" belt
    double boundary_margin = 0.02;

    double width() const { return re_max - re_min; }
    double height() const { return im_max - im_min; }
    bool contains(cplx k) const {
        return k.real() >= re_min && k.real() <= re_max && k.imag() >= im_min &&
               k.imag() <= im_max;
    }
};

struct PoleRecord {
    cplx k0;
    // absent when the zero falls outside the half-plane taxonomy
    std::optional<PoleClass> classification;
    double residual = 0.0;  // |f_l(k0)| after refinement
    cplx jost_deriv;
    cplx pseudonorm;
    cplx norm_constant;
    std::vector<std::string> flags;

    bool flagged() const { return !flags.empty(); }
};

// A Jost function of k with a derivative; the interface pole location and
// pseudonorm evaluation run against.
class JostEvaluator {
public:
    virtual ~JostEvaluator() = default;
    virtual cplx operator()(cplx k) const = 0;
    virtual int l() const = 0;
    // cutoff radius, used to size the derivative circle
    virtual double length_scale() const { return 1.0; }
    // 16-point Cauchy circle rule on operator()
    virtual cplx derivative(cplx k) const;
};

// Numeric engine behind the evaluator interface.
class NumericJost final : public JostEvaluator {
public:
    NumericJost(Potential pot, int l, double tol = 1e-11);
    cplx operator()(cplx k) const override;
    int l() const override { return l_; }
    double length_scale() const override;
    const Potential& potential() const { return pot_; }
    double tol() const { return tol_; }

private:
    Potential pot_;
    int l_;
    double tol_;
};

// Exact square-well evaluator (same interface, closed forms).
class AnalyticSquareWellJost final : public JostEvaluator {
public:
    AnalyticSquareWellJost(sw::SquareWellParams params, int l) : p_(params), l_(l) {}
    cplx operator()(cplx k) const override;
    int l() const override { return l_; }
    double length_scale() const override;
    const sw::SquareWellParams& params() const { return p_; }

private:
    sw::SquareWellParams p_;
    int l_;
};

// Winding number of f around the rectangle boundary with adaptive edge
// sampling (successive phase steps < pi/2). If a zero sits on or near the
// contour the region is dilated by boundary_margin and re-walked; failure
// after that raises ComputationError.
int count_zeros(const JostEvaluator& f, const ScanRegion& region);

// Subdivide until each cell holds at most one zero (or max_depth), refine by
// Newton, merge duplicates, classify, and attach pseudonorm and
// normalization data. Records are sorted by (Re k0, Im k0). Anomalies are
// flagged on the records, never silent.
std::vector<PoleRecord> find_poles(const JostEvaluator& f, const ScanRegion& region);
std::vector<PoleRecord> find_poles(const Potential& pot, int l, const ScanRegion& region,
                                   double tol = 1e-11);

// Newton iteration k <- k - f/f' from a starting guess. Returns the refined
// zero or nullopt. On success residual <= newton_tol (1 + |k|).
std::optional<cplx> refine_zero(const JostEvaluator& f, cplx start, double newton_tol,
                                int max_iter = 60);

struct TrajectoryPoint {
    double parameter;
    PoleRecord record;
};

struct Trajectory {
    std::vector<TrajectoryPoint> points;
    std::string termination;  // empty while tracked to the sweep end
};

// Continuation of every pole found at parameter = lo: previous position as
// predictor, Newton as corrector, classification re-evaluated per step. A
// diverging Newton or a jump larger than the step-scaled bound terminates
// the trajectory with a reason.
std::vector<Trajectory> trajectory(const std::function<Potential(double)>& family,
                                   double lo, double hi, int steps, int l,
                                   const ScanRegion& region, double tol = 1e-11);

}  // namespace jost::poles
