#include "jost/report.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace jost::report {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ordered_json complex_json(cplx z) {
    return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

ordered_json potential_json(const Potential& pot) {
    ordered_json j;
    switch (pot.kind()) {
        case Potential::Kind::SquareWell:
            j["type"] = "square_well";
            j["V0"] = pot.well_depth();
            j["a"] = pot.well_radius();
            break;
        case Potential::Kind::PiecewiseConstant:
            j["type"] = "piecewise_constant";
            j["breakpoints"] = pot.segment_edges();
            j["values"] = pot.segment_values();
            j["cutoff"] = pot.cutoff();
            break;
        case Potential::Kind::Sampled:
            j["type"] = "sampled";
            j["cutoff"] = pot.cutoff();
            break;
    }
    return j;
}

std::string class_name(const std::optional<PoleClass>& c) {
    return c ? to_string(*c) : "error";
}

ordered_json record_json(const poles::PoleRecord& rec) {
    ordered_json j;
    j["k0"] = complex_json(rec.k0);
    j["E"] = complex_json(rec.k0 * rec.k0);
    j["class"] = class_name(rec.classification);
    j["residual"] = rec.residual;
    j["pseudonorm"] = complex_json(rec.pseudonorm);
    j["norm_constant"] = complex_json(rec.norm_constant);
    j["flags"] = rec.flags;
    return j;
}

}  // namespace

std::string poles_json(const Potential& pot, int l, const poles::ScanRegion& region,
                       const std::vector<poles::PoleRecord>& records) {
    ordered_json j;
    j["units"] = kUnitsNote;
    j["potential"] = potential_json(pot);
    j["l"] = l;
    j["region"] = ordered_json{{"re_min", region.re_min},
                               {"re_max", region.re_max},
                               {"im_min", region.im_min},
                               {"im_max", region.im_max}};
    j["poles"] = ordered_json::array();
    for (const auto& rec : records) j["poles"].push_back(record_json(rec));
    return j.dump(2) + "\n";
}

std::string poles_csv(const std::vector<poles::PoleRecord>& records) {
    std::string out = "# ";
    out += kUnitsNote;
    out +=
        "\nre_k0,im_k0,re_E,im_E,class,residual,re_pseudonorm,im_pseudonorm,"
        "re_norm_constant,im_norm_constant,flags\n";
    for (const auto& rec : records) {
        const cplx E = rec.k0 * rec.k0;
        out += fmt(rec.k0.real()) + "," + fmt(rec.k0.imag()) + ",";
        out += fmt(E.real()) + "," + fmt(E.imag()) + ",";
        out += class_name(rec.classification) + "," + fmt(rec.residual) + ",";
        out += fmt(rec.pseudonorm.real()) + "," + fmt(rec.pseudonorm.imag()) + ",";
        out += fmt(rec.norm_constant.real()) + "," + fmt(rec.norm_constant.imag()) + ",";
        for (std::size_t i = 0; i < rec.flags.size(); ++i) {
            if (i) out += ";";
            out += rec.flags[i];
        }
        out += "\n";
    }
    return out;
}

std::string grid_csv(const std::vector<GridRow>& rows) {
    std::string out = "# ";
    out += kUnitsNote;
    out += "\nre_k,im_k,abs_f,arg_f\n";
    for (const auto& row : rows) {
        out += fmt(row.k.real()) + "," + fmt(row.k.imag()) + "," + fmt(row.abs_f) + "," +
               fmt(row.arg_f) + "\n";
    }
    return out;
}

std::string trajectory_csv(const std::vector<poles::Trajectory>& tracks) {
    std::string out = "# ";
    out += kUnitsNote;
    out += "\nparameter,re_k0,im_k0,class,re_pseudonorm,im_pseudonorm\n";
    for (std::size_t t = 0; t < tracks.size(); ++t) {
        out += "# trajectory " + std::to_string(t) + "\n";
        for (const auto& pt : tracks[t].points) {
            out += fmt(pt.parameter) + "," + fmt(pt.record.k0.real()) + "," +
                   fmt(pt.record.k0.imag()) + "," + class_name(pt.record.classification) +
                   "," + fmt(pt.record.pseudonorm.real()) + "," +
                   fmt(pt.record.pseudonorm.imag()) + "\n";
        }
        if (!tracks[t].termination.empty())
            out += "# trajectory " + std::to_string(t) +
                   " terminated: " + tracks[t].termination + "\n";
    }
    return out;
}

std::string pseudonorm_json(const Potential& pot, int l, const PseudonormReport& rep,
                            bool trace) {
    ordered_json j;
    j["units"] = kUnitsNote;
    j["potential"] = potential_json(pot);
    j["l"] = l;
    j["k0_input"] = complex_json(rep.k0_input);
    j["k0"] = complex_json(rep.k0_refined);
    j["class"] = class_name(rep.classification);
    j["pseudonorm_formula"] = complex_json(rep.formula_value);
    if (rep.regularized_ok) {
        j["pseudonorm_regularized"] = complex_json(rep.regularized_value);
        j["error_estimate"] = rep.error_estimate;
        j["discrepancy"] = std::abs(rep.formula_value - rep.regularized_value);
    } else {
        j["pseudonorm_regularized"] = nullptr;
        j["regularized_failure"] = rep.regularized_failure;
    }
    if (trace) {
        j["trace"] = ordered_json::array();
        for (std::size_t i = 0; i < rep.eps.size(); ++i)
            j["trace"].push_back(ordered_json{{"eps", rep.eps[i]},
                                              {"re", rep.damped_values[i].real()},
                                              {"im", rep.damped_values[i].imag()}});
    }
    return j.dump(2) + "\n";
}

std::string pseudonorm_csv(const PseudonormReport& rep, bool trace) {
    std::string out = "# ";
    out += kUnitsNote;
    out +=
        "\nre_k0,im_k0,class,re_formula,im_formula,re_regularized,im_regularized,"
        "error_estimate,discrepancy\n";
    out += fmt(rep.k0_refined.real()) + "," + fmt(rep.k0_refined.imag()) + ",";
    out += class_name(rep.classification) + ",";
    out += fmt(rep.formula_value.real()) + "," + fmt(rep.formula_value.imag()) + ",";
    if (rep.regularized_ok) {
        out += fmt(rep.regularized_value.real()) + "," + fmt(rep.regularized_value.imag()) +
               "," + fmt(rep.error_estimate) + "," +
               fmt(std::abs(rep.formula_value - rep.regularized_value));
    } else {
        out += "nan,nan,nan,nan";
    }
    out += "\n";
    if (trace) {
        for (std::size_t i = 0; i < rep.eps.size(); ++i)
            out += "# eps " + fmt(rep.eps[i]) + "," + fmt(rep.damped_values[i].real()) +
                   "," + fmt(rep.damped_values[i].imag()) + "\n";
    }
    return out;
}

Potential potential_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const std::string type = j.at("type").get<std::string>();
    if (type == "square_well")
        return Potential::square_well(j.at("V0").get<double>(), j.at("a").get<double>());
    if (type == "piecewise_constant")
        return Potential::piecewise_constant(j.at("breakpoints").get<std::vector<double>>(),
                                             j.at("values").get<std::vector<double>>(),
                                             j.at("cutoff").get<double>());
    if (type == "sampled")
        return Potential::sampled(j.at("grid").get<std::vector<double>>(),
                                  j.at("values").get<std::vector<double>>(),
                                  j.at("cutoff").get<double>());
    throw std::invalid_argument("potential file: unknown type '" + type + "'");
}

}  // namespace jost::report
