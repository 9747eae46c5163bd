#include "jost/poles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "jost/numerics.hpp"
#include "jost/pseudonorm.hpp"
#include "jost/radial.hpp"

namespace jost::poles {

namespace {

constexpr double kClassifyTol = 1e-8;
constexpr double kPi = std::numbers::pi;

struct Rect {
    double re_min, re_max, im_min, im_max;

    cplx corner(int i) const {  // counterclockwise from bottom-left
        switch (i & 3) {
            case 0: return {re_min, im_min};
            case 1: return {re_max, im_min};
            case 2: return {re_max, im_max};
            default: return {re_min, im_max};
        }
    }
    cplx center() const { return {0.5 * (re_min + re_max), 0.5 * (im_min + im_max)}; }
    Rect dilated(double fre, double fim) const {
        const double dre = fre * (re_max - re_min), dim = fim * (im_max - im_min);
        return {re_min - dre, re_max + dre, im_min - dim, im_max + dim};
    }
    bool contains(cplx k) const {
        return k.real() >= re_min && k.real() <= re_max && k.imag() >= im_min &&
               k.imag() <= im_max;
    }
};

// zero on or next to the contour: the phase walk cannot settle
struct ContourTooClose {
    cplx where;
};

struct EdgeWalk {
    const JostEvaluator& f;
    double total = 0.0;

    void segment(cplx z1, cplx f1, cplx z2, cplx f2, int depth) {
        if (f1 == cplx(0.0, 0.0) || f2 == cplx(0.0, 0.0)) throw ContourTooClose{z1};
        const double step = std::arg(f2 / f1);
        if (std::abs(step) < 0.5 * kPi) {
            total += step;
            return;
        }
        if (depth >= 48) throw ContourTooClose{0.5 * (z1 + z2)};
        const cplx zm = 0.5 * (z1 + z2);
        const cplx fm = f(zm);
        segment(z1, f1, zm, fm, depth + 1);
        segment(zm, fm, z2, f2, depth + 1);
    }
};

int winding_once(const JostEvaluator& f, const Rect& rect) {
    constexpr int kPerEdge = 16;
    EdgeWalk walk{f};
    for (int e = 0; e < 4; ++e) {
        const cplx za = rect.corner(e), zb = rect.corner(e + 1);
        cplx zp = za, fp = f(za);
        for (int i = 1; i <= kPerEdge; ++i) {
            const double t = static_cast<double>(i) / kPerEdge;
            const cplx zn = za + t * (zb - za);
            const cplx fn = f(zn);
            walk.segment(zp, fp, zn, fn, 0);
            zp = zn;
            fp = fn;
        }
    }
    const double turns = walk.total / (2.0 * kPi);
    const int w = static_cast<int>(std::lround(turns));
    if (std::abs(turns - w) > 0.25)
        throw ComputationError("count_zeros: phase walk did not close (" +
                               std::to_string(turns) + " turns)");
    return w;
}

// walk the contour, dilating while a zero sits on it
int winding_dilating(const JostEvaluator& f, Rect& rect, double margin) {
    for (int attempt = 0;; ++attempt) {
        try {
            return winding_once(f, rect);
        } catch (const ContourTooClose&) {
            if (attempt >= 3)
                throw ComputationError(
                    "count_zeros: zero pinned to the contour after repeated dilation");
            rect = rect.dilated(margin, margin);
        }
    }
}

struct Candidate {
    cplx k0;
    bool suspected_multiple = false;
    bool degraded = false;
};

void subdivide(const JostEvaluator& f, const Rect& cell, int count, int depth,
               const ScanRegion& region, std::vector<Candidate>& out) {
    if (count == 0) return;

    const bool leaf = (count == 1) || depth >= region.max_depth;
    if (leaf) {
        const Rect window = cell.dilated(0.1, 0.1);
        Candidate cand;
        if (auto k0 = refine_zero(f, cell.center(), region.newton_tol)) {
            if (window.contains(*k0)) {
                cand.k0 = *k0;
                cand.suspected_multiple = count > 1;
                const double bound = region.newton_tol * (1.0 + std::abs(*k0));
                cand.degraded = std::abs(f(*k0)) > bound;
                out.push_back(cand);
                if (count == 1) return;
            }
        }
        if (depth >= region.max_depth) return;  // give up quietly; top-level count check reports
    }

    const cplx c = cell.center();
    const Rect quads[4] = {
        {cell.re_min, c.real(), cell.im_min, c.imag()},
        {c.real(), cell.re_max, cell.im_min, c.imag()},
        {cell.re_min, c.real(), c.imag(), cell.im_max},
        {c.real(), cell.re_max, c.imag(), cell.im_max},
    };
    for (const Rect& q : quads) {
        Rect qd = q;
        const int w = winding_dilating(f, qd, 0.05);
        subdivide(f, qd, w, depth + 1, region, out);
    }
}

cplx nan_cplx() {
    const double qn = std::numeric_limits<double>::quiet_NaN();
    return {qn, qn};
}

}  // namespace

cplx JostEvaluator::derivative(cplx k) const {
    // f_l is entire of exponential type ~ 2 cutoff, so a generous circle
    // keeps the rule exact while damping evaluation noise by 1/h.
    double h = std::min(0.2 * std::max(1.0, std::abs(k)), 0.5 / length_scale());
    if (l() >= 1 && std::abs(k) < 2.0 * h)
        h = 0.25 * std::abs(k);  // keep the circle off the k = 0 formula singularity
    return num::cauchy_derivative([this](cplx z) { return (*this)(z); }, k, h);
}

NumericJost::NumericJost(Potential pot, int l, double tol)
    : pot_(std::move(pot)), l_(l), tol_(tol) {}

cplx NumericJost::operator()(cplx k) const { return radial::jost_function(pot_, l_, k, tol_); }

double NumericJost::length_scale() const { return pot_.cutoff(); }

cplx AnalyticSquareWellJost::operator()(cplx k) const { return sw::jost(l_, k, p_); }

double AnalyticSquareWellJost::length_scale() const { return p_.a; }

int count_zeros(const JostEvaluator& f, const ScanRegion& region) {
    Rect rect{region.re_min, region.re_max, region.im_min, region.im_max};
    return winding_dilating(f, rect, region.boundary_margin);
}

std::optional<cplx> refine_zero(const JostEvaluator& f, cplx start, double newton_tol,
                                int max_iter) {
    cplx k = start;
    const double scale0 = 1.0 + std::abs(start);
    for (int it = 0; it < max_iter; ++it) {
        const cplx fk = f(k);
        if (std::abs(fk) <= newton_tol * (1.0 + std::abs(k))) return k;
        const cplx dfk = f.derivative(k);
        if (!(std::abs(dfk) > 0.0)) return std::nullopt;
        const cplx step = fk / dfk;
        k -= step;
        if (!std::isfinite(k.real()) || !std::isfinite(k.imag())) return std::nullopt;
        if (std::abs(k) > 1e6 * scale0) return std::nullopt;
        if (std::abs(step) < 1e-14 * (1.0 + std::abs(k))) return k;
    }
    return std::abs(f(k)) <= 1e4 * newton_tol * (1.0 + std::abs(k))
               ? std::optional<cplx>(k)
               : std::nullopt;
}

std::vector<PoleRecord> find_poles(const JostEvaluator& f, const ScanRegion& region) {
    Rect top{region.re_min, region.re_max, region.im_min, region.im_max};
    const int total = winding_dilating(f, top, region.boundary_margin);

    std::vector<Candidate> cands;
    subdivide(f, top, total, 0, region, cands);

    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        return a.k0.real() != b.k0.real() ? a.k0.real() < b.k0.real()
                                          : a.k0.imag() < b.k0.imag();
    });
    std::vector<Candidate> merged;
    for (const Candidate& c : cands) {
        if (!top.contains(c.k0)) continue;
        const bool dup =
            !merged.empty() &&
            std::abs(c.k0 - merged.back().k0) < 1e-8 * (1.0 + std::abs(c.k0));
        if (dup) {
            merged.back().suspected_multiple |= c.suspected_multiple;
        } else {
            merged.push_back(c);
        }
    }

    const Rect inner{region.re_min + region.boundary_margin * region.width(),
                     region.re_max - region.boundary_margin * region.width(),
                     region.im_min + region.boundary_margin * region.height(),
                     region.im_max - region.boundary_margin * region.height()};

    std::vector<PoleRecord> records;
    for (const Candidate& c : merged) {
        PoleRecord rec;
        rec.k0 = c.k0;
        rec.residual = std::abs(f(c.k0));
        if (c.suspected_multiple) rec.flags.push_back("suspected-multiple");
        if (c.degraded) rec.flags.push_back("degraded-convergence");
        if (!inner.contains(c.k0)) rec.flags.push_back("boundary-uncertain");

        try {
            rec.classification = classify(c.k0, kClassifyTol);
        } catch (const std::domain_error&) {
            rec.classification = std::nullopt;
            rec.flags.push_back("outside-taxonomy");
        }

        if (std::abs(c.k0) < 1e-8) {
            rec.flags.push_back("near-threshold");
            rec.jost_deriv = f.derivative(c.k0);
            rec.pseudonorm = nan_cplx();
            rec.norm_constant = nan_cplx();
        } else {
            rec.jost_deriv = f.derivative(c.k0);
            try {
                rec.pseudonorm = pnorm::formula(f, c.k0);
                rec.norm_constant = pnorm::normalization_constant(f, c.k0);
            } catch (const std::exception&) {
                rec.pseudonorm = nan_cplx();
                rec.norm_constant = nan_cplx();
                rec.flags.push_back("pseudonorm-failed");
            }
        }
        records.push_back(std::move(rec));
    }

    if (static_cast<int>(records.size()) != total)
        for (PoleRecord& r : records) r.flags.push_back("count-mismatch");
    return records;
}

std::vector<PoleRecord> find_poles(const Potential& pot, int l, const ScanRegion& region,
                                   double tol) {
    return find_poles(NumericJost(pot, l, tol), region);
}

std::vector<Trajectory> trajectory(const std::function<Potential(double)>& family,
                                   double lo, double hi, int steps, int l,
                                   const ScanRegion& region, double tol) {
    if (steps < 1) throw std::invalid_argument("trajectory: steps must be >= 1");

    std::vector<Trajectory> tracks;
    {
        const NumericJost f0(family(lo), l, tol);
        for (PoleRecord& rec : find_poles(f0, region)) {
            Trajectory t;
            t.points.push_back({lo, std::move(rec)});
            tracks.push_back(std::move(t));
        }
    }

    for (int s = 1; s <= steps; ++s) {
        const double p = lo + (hi - lo) * s / steps;
        const NumericJost f(family(p), l, tol);
        for (Trajectory& t : tracks) {
            if (!t.termination.empty()) continue;
            const cplx prev = t.points.back().record.k0;
            const auto k0 = refine_zero(f, prev, region.newton_tol);
            if (!k0) {
                t.termination = "newton diverged at parameter " + std::to_string(p);
                continue;
            }
            if (std::abs(*k0 - prev) > 0.5 * (1.0 + std::abs(prev))) {
                t.termination = "tracking jump at parameter " + std::to_string(p);
                continue;
            }
            PoleRecord rec;
            rec.k0 = *k0;
            rec.residual = std::abs(f(*k0));
            try {
                rec.classification = classify(*k0, kClassifyTol);
            } catch (const std::domain_error&) {
                rec.classification = std::nullopt;
                rec.flags.push_back("outside-taxonomy");
            }
            if (std::abs(*k0) < 1e-8) {
                rec.flags.push_back("near-threshold");
                rec.pseudonorm = nan_cplx();
                rec.norm_constant = nan_cplx();
            } else {
                rec.jost_deriv = f.derivative(*k0);
                try {
                    rec.pseudonorm = pnorm::formula(f, *k0);
                    rec.norm_constant = pnorm::normalization_constant(f, *k0);
                } catch (const std::exception&) {
                    rec.pseudonorm = nan_cplx();
                    rec.norm_constant = nan_cplx();
                    rec.flags.push_back("pseudonorm-failed");
                }
            }
            t.points.push_back({p, std::move(rec)});
        }
    }
    return tracks;
}

}  // namespace jost::poles
