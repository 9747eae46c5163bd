// Machine-readable output: JSON and CSV pole reports, grid and trajectory
// tables. Field layout is part of the CLI contract; formatting is fixed so
// identical runs produce byte-identical files.
#pragma once

#include <string>
#include <vector>

#include "jost/poles.hpp"
#include "jost/pseudonorm.hpp"
#include "jost/types.hpp"

namespace jost::report {

std::string poles_json(const Potential& pot, int l, const poles::ScanRegion& region,
                       const std::vector<poles::PoleRecord>& records);

std::string poles_csv(const std::vector<poles::PoleRecord>& records);

struct GridRow {
    cplx k;
    double abs_f;
    double arg_f;
};
std::string grid_csv(const std::vector<GridRow>& rows);

std::string trajectory_csv(const std::vector<poles::Trajectory>& tracks);

struct PseudonormReport {
    cplx k0_input;
    cplx k0_refined;
    std::optional<PoleClass> classification;
    cplx formula_value;
    bool regularized_ok = false;
    cplx regularized_value;
    double error_estimate = 0.0;
    std::string regularized_failure;  // set when the eps table diverged
    std::vector<double> eps;
    std::vector<cplx> damped_values;
};
std::string pseudonorm_json(const Potential& pot, int l, const PseudonormReport& rep,
                            bool trace);
std::string pseudonorm_csv(const PseudonormReport& rep, bool trace);

// {"type": "square_well"|"piecewise_constant"|"sampled", ...}
Potential potential_from_json(const std::string& text);

}  // namespace jost::report
