#include "jost/types.hpp"

#include <algorithm>
#include <cmath>

namespace jost {

const char* to_string(PoleClass c) {
    switch (c) {
        case PoleClass::Bound: return "bound";
        case PoleClass::Virtual: return "virtual";
        case PoleClass::Resonant: return "resonant";
    }
    return "?";
}

PoleClass classify(cplx k0, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("classify: tol must be positive");
    if (!std::isfinite(k0.real()) || !std::isfinite(k0.imag()))
        throw std::invalid_argument("classify: k0 must be finite");
    const bool on_axis = std::abs(k0.real()) < tol * (1.0 + std::abs(k0));
    if (on_axis)
        return k0.imag() > 0.0 ? PoleClass::Virtual : PoleClass::Bound;
    if (k0.imag() > 0.0)
        return PoleClass::Resonant;
    throw std::domain_error(
        "classify: zero off the imaginary axis in the lower half plane has no class");
}

namespace {

void check_increasing(const std::vector<double>& v, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] > 0.0) || !std::isfinite(v[i]))
            throw std::invalid_argument(std::string("Potential: ") + what +
                                        " must be positive and finite");
        if (i > 0 && !(v[i] > v[i - 1]))
            throw std::invalid_argument(std::string("Potential: ") + what +
                                        " must be strictly increasing");
    }
}

}  // namespace

Potential Potential::square_well(double depth, double radius) {
    if (!(depth >= 0.0) || !std::isfinite(depth))
        throw std::invalid_argument("Potential: well depth must be >= 0");
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("Potential: well radius must be > 0");
    Potential p;
    p.kind_ = Kind::SquareWell;
    p.cutoff_ = radius;
    p.edges_ = {radius};
    p.values_ = {-depth};
    p.breakpoints_ = {radius};
    return p;
}

Potential Potential::piecewise_constant(std::vector<double> breakpoints,
                                        std::vector<double> values,
                                        double cutoff) {
    if (breakpoints.empty() || breakpoints.size() != values.size())
        throw std::invalid_argument(
            "Potential: need one value per breakpoint (right segment edges)");
    check_increasing(breakpoints, "breakpoints");
    if (!(cutoff > 0.0) || breakpoints.back() > cutoff)
        throw std::invalid_argument("Potential: breakpoints must lie within (0, cutoff]");
    Potential p;
    p.kind_ = Kind::PiecewiseConstant;
    p.cutoff_ = cutoff;
    p.edges_ = breakpoints;
    p.values_ = std::move(values);
    p.breakpoints_ = std::move(breakpoints);
    if (p.breakpoints_.back() < cutoff) p.breakpoints_.push_back(cutoff);
    return p;
}

Potential Potential::sampled(std::vector<double> grid, std::vector<double> values,
                             double cutoff) {
    if (grid.size() < 2 || grid.size() != values.size())
        throw std::invalid_argument("Potential: sampled needs >= 2 matching nodes");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("Potential: grid must be strictly increasing");
    if (!(grid.front() >= 0.0) || !(cutoff > 0.0) || grid.back() > cutoff)
        throw std::invalid_argument("Potential: grid must lie within [0, cutoff]");

    Potential p;
    p.kind_ = Kind::Sampled;
    p.cutoff_ = cutoff;
    p.grid_ = std::move(grid);
    p.samples_ = std::move(values);

    // Fritsch-Carlson monotone slopes; keeps the interpolant free of the
    // overshoot that would seed spurious Jost zeros.
    const std::size_t n = p.grid_.size();
    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = p.grid_[i + 1] - p.grid_[i];
        delta[i] = (p.samples_[i + 1] - p.samples_[i]) / h[i];
    }
    p.slopes_.assign(n, 0.0);
    p.slopes_[0] = delta[0];
    p.slopes_[n - 1] = delta[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            p.slopes_[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            p.slopes_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }

    for (double r : p.grid_)
        if (r > 0.0) p.breakpoints_.push_back(r);
    if (p.breakpoints_.empty() || p.breakpoints_.back() < cutoff)
        p.breakpoints_.push_back(cutoff);
    return p;
}

double Potential::operator()(double r) const {
    if (r >= cutoff_) return 0.0;
    switch (kind_) {
        case Kind::SquareWell:
            return values_[0];
        case Kind::PiecewiseConstant: {
            auto it = std::upper_bound(edges_.begin(), edges_.end(), r);
            if (it == edges_.end()) return 0.0;
            return values_[static_cast<std::size_t>(it - edges_.begin())];
        }
        case Kind::Sampled: {
            if (r <= grid_.front()) return samples_.front();
            if (r >= grid_.back()) return 0.0;
            auto it = std::upper_bound(grid_.begin(), grid_.end(), r);
            const std::size_t i = static_cast<std::size_t>(it - grid_.begin()) - 1;
            const double h = grid_[i + 1] - grid_[i];
            const double t = (r - grid_[i]) / h;
            const double t2 = t * t, t3 = t2 * t;
            return (2 * t3 - 3 * t2 + 1) * samples_[i] + (t3 - 2 * t2 + t) * h * slopes_[i] +
                   (-2 * t3 + 3 * t2) * samples_[i + 1] + (t3 - t2) * h * slopes_[i + 1];
        }
    }
    return 0.0;
}

bool Potential::is_free() const {
    if (kind_ == Kind::Sampled) {
        return std::all_of(samples_.begin(), samples_.end(),
                           [](double v) { return v == 0.0; });
    }
    return std::all_of(values_.begin(), values_.end(),
                       [](double v) { return v == 0.0; });
}

double Potential::well_depth() const {
    if (kind_ != Kind::SquareWell)
        throw std::logic_error("Potential: not a square well");
    return -values_[0];
}

double Potential::well_radius() const {
    if (kind_ != Kind::SquareWell)
        throw std::logic_error("Potential: not a square well");
    return cutoff_;
}

}  // namespace jost
