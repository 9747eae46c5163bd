// Command line surface: pole scans, pseudonorm reports, Jost-grid dumps and
// depth sweeps over square wells and user-supplied cutoff potentials.
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "jost/poles.hpp"
#include "jost/pseudonorm.hpp"
#include "jost/radial.hpp"
#include "jost/report.hpp"
#include "jost/square_well.hpp"
#include "jost/types.hpp"

namespace {

using jost::cplx;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPartial = 2;
constexpr int kExitNumeric = 3;

struct Options {
    double well = 0.0;
    bool well_set = false;
    double radius = 1.0;
    std::string potential_file;
    int l = 0;
    double tol = 1e-11;
    std::string format = "json";
    std::string out = "-";
    std::string engine = "numeric";

    std::string re_range, im_range;
    double newton_tol = 1e-12;
    int max_depth = 12;
    double margin = 0.02;

    std::string k0_text;
    bool trace = false;
    double eps0 = 0.0;  // 0 = derive from cutoff
    double ratio = 0.5;
    int count = 8;

    std::string sweep;
    long max_grid = 4000000;
};

void add_potential_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--well", o.well, "Square well depth V0 (hbar^2/2m = 1)")
        ->check(CLI::NonNegativeNumber)
        ->each([&o](const std::string&) { o.well_set = true; });
    cmd->add_option("--radius", o.radius, "Square well radius a")->check(CLI::PositiveNumber);
    cmd->add_option("--potential-file", o.potential_file,
                    "JSON file describing a cutoff potential");
    cmd->add_option("--l", o.l, "Angular momentum")->check(CLI::Range(0, 40));
    cmd->add_option("--tol", o.tol, "Radial integrator tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--engine", o.engine, "numeric | analytic (square well only)")
        ->check(CLI::IsMember({"numeric", "analytic"}));
    cmd->add_option("--format", o.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", o.out, "Output path ('-' = stdout)");
}

jost::Potential make_potential(const Options& o) {
    if (!o.potential_file.empty()) {
        if (o.well_set)
            throw std::invalid_argument("--well and --potential-file are exclusive");
        std::ifstream in(o.potential_file);
        if (!in) throw std::invalid_argument("--potential-file: cannot open " + o.potential_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        return jost::report::potential_from_json(buf.str());
    }
    if (!o.well_set)
        throw std::invalid_argument("need --well or --potential-file");
    return jost::Potential::square_well(o.well, o.radius);
}

std::unique_ptr<jost::poles::JostEvaluator> make_evaluator(const Options& o,
                                                           const jost::Potential& pot) {
    if (o.engine == "analytic") {
        if (pot.kind() != jost::Potential::Kind::SquareWell)
            throw std::invalid_argument("--engine analytic requires a square well");
        return std::make_unique<jost::poles::AnalyticSquareWellJost>(
            jost::sw::SquareWellParams{pot.well_depth(), pot.well_radius()}, o.l);
    }
    return std::make_unique<jost::poles::NumericJost>(pot, o.l, o.tol);
}

std::pair<double, double> parse_range(const std::string& text, const char* flag) {
    double lo, hi;
    char colon;
    std::istringstream ss(text);
    if (!(ss >> lo >> colon >> hi) || colon != ':' || !(lo < hi))
        throw std::invalid_argument(std::string(flag) + ": expected lo:hi with lo < hi");
    return {lo, hi};
}

std::tuple<double, double, int> parse_range_n(const std::string& text, const char* flag) {
    double lo, hi;
    int n;
    char c1, c2;
    std::istringstream ss(text);
    if (!(ss >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':' || !(lo < hi) || n < 2)
        throw std::invalid_argument(std::string(flag) + ": expected lo:hi:n with n >= 2");
    return {lo, hi, n};
}

cplx parse_complex(std::string text, const char* flag) {
    // accepts "re,im" and "re[+-]imi"
    const auto comma = text.find(',');
    try {
        if (comma != std::string::npos) {
            return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
        }
        if (!text.empty() && (text.back() == 'i' || text.back() == 'j')) {
            text.pop_back();
            for (std::size_t p = text.size(); p-- > 1;) {
                if ((text[p] == '+' || text[p] == '-') && text[p - 1] != 'e' &&
                    text[p - 1] != 'E') {
                    return {std::stod(text.substr(0, p)), std::stod(text.substr(p))};
                }
            }
            return {0.0, std::stod(text)};
        }
        return {std::stod(text), 0.0};
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(flag) + ": cannot parse complex number '" +
                                    text + "'");
    }
}

void emit(const Options& o, const std::string& payload) {
    if (o.out == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::invalid_argument("--out: cannot open " + o.out);
    f << payload;
}

jost::poles::ScanRegion make_region(const Options& o) {
    const auto [re_lo, re_hi] = parse_range(o.re_range, "--re");
    const auto [im_lo, im_hi] = parse_range(o.im_range, "--im");
    jost::poles::ScanRegion region{re_lo, re_hi, im_lo, im_hi};
    region.newton_tol = o.newton_tol;
    region.max_depth = o.max_depth;
    region.boundary_margin = o.margin;
    return region;
}

int run_poles(const Options& o) {
    const jost::Potential pot = make_potential(o);
    const auto eval = make_evaluator(o, pot);
    const jost::poles::ScanRegion region = make_region(o);

    const auto records = jost::poles::find_poles(*eval, region);
    emit(o, o.format == "json" ? jost::report::poles_json(pot, o.l, region, records)
                               : jost::report::poles_csv(records));
    for (const auto& rec : records)
        if (rec.flagged()) return kExitPartial;
    return kExitOk;
}

int run_pseudonorm(const Options& o) {
    const jost::Potential pot = make_potential(o);
    const auto eval = make_evaluator(o, pot);
    const cplx guess = parse_complex(o.k0_text, "--k0");

    const auto k0 = jost::poles::refine_zero(*eval, guess, o.newton_tol);
    if (!k0)
        throw jost::ComputationError("--k0 is not near a Jost zero (Newton diverged)");

    jost::report::PseudonormReport rep;
    rep.k0_input = guess;
    rep.k0_refined = *k0;
    try {
        rep.classification = jost::classify(*k0, 1e-8);
    } catch (const std::domain_error&) {
        rep.classification = std::nullopt;
    }
    rep.formula_value = jost::pnorm::formula(*eval, *k0);

    auto schedule = o.eps0 > 0.0
                        ? jost::pnorm::RegulatorSchedule{o.eps0, o.ratio, o.count, 1e-16}
                        : jost::pnorm::RegulatorSchedule::for_cutoff(pot.cutoff());
    try {
        const auto reg = jost::pnorm::regularized(pot, o.l, *k0, schedule, o.tol);
        rep.regularized_ok = true;
        rep.regularized_value = reg.value;
        rep.error_estimate = reg.error_estimate;
        rep.eps = reg.eps;
        rep.damped_values = reg.damped_values;
    } catch (const jost::pnorm::RegularizationError& e) {
        rep.regularized_ok = false;
        rep.regularized_failure = e.what();
        rep.eps = e.table.eps;
        rep.damped_values = e.table.damped_values;
    }

    emit(o, o.format == "json" ? jost::report::pseudonorm_json(pot, o.l, rep, o.trace)
                               : jost::report::pseudonorm_csv(rep, o.trace));
    return rep.regularized_ok ? kExitOk : kExitPartial;
}

int run_grid(const Options& o) {
    const jost::Potential pot = make_potential(o);
    const auto eval = make_evaluator(o, pot);
    const auto [re_lo, re_hi, nre] = parse_range_n(o.re_range, "--re");
    const auto [im_lo, im_hi, nim] = parse_range_n(o.im_range, "--im");
    if (static_cast<long>(nre) * nim > o.max_grid)
        throw std::invalid_argument("--re/--im: grid exceeds --max-grid");

    std::vector<jost::report::GridRow> rows;
    rows.reserve(static_cast<std::size_t>(nre) * nim);
    for (int i = 0; i < nim; ++i) {
        const double im = im_lo + (im_hi - im_lo) * i / (nim - 1);
        for (int j = 0; j < nre; ++j) {
            const double re = re_lo + (re_hi - re_lo) * j / (nre - 1);
            const cplx k{re, im};
            const cplx f = (*eval)(k);
            rows.push_back({k, std::abs(f), std::arg(f)});
        }
    }
    emit(o, jost::report::grid_csv(rows));
    return kExitOk;
}

int run_trajectory(const Options& o) {
    const jost::Potential pot = make_potential(o);  // validates flags; sweep overrides depth
    if (pot.kind() != jost::Potential::Kind::SquareWell)
        throw std::invalid_argument("--sweep: trajectories sweep square-well depth only");
    std::string sweep = o.sweep;
    if (sweep.rfind("V0=", 0) == 0) sweep = sweep.substr(3);
    const auto [lo, hi, steps] = parse_range_n(sweep, "--sweep");
    const jost::poles::ScanRegion region = make_region(o);

    const double a = pot.well_radius();
    const auto family = [a](double v0) { return jost::Potential::square_well(v0, a); };
    const auto tracks =
        jost::poles::trajectory(family, lo, hi, steps, o.l, region, o.tol);
    emit(o, jost::report::trajectory_csv(tracks));
    for (const auto& t : tracks)
        if (!t.termination.empty()) return kExitPartial;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Jost functions of short-range radial potentials: zeros of f_l(k) in the "
        "complex momentum plane (bound, virtual and resonant states) and their "
        "pseudonorms. Units: hbar^2/2m = 1, E = k^2."};
    app.require_subcommand(1);
    Options o;

    CLI::App* poles = app.add_subcommand("poles", "Locate Jost zeros in a k-plane box");
    add_potential_flags(poles, o);
    poles->add_option("--re", o.re_range, "Re k range lo:hi")->required();
    poles->add_option("--im", o.im_range, "Im k range lo:hi")->required();
    poles->add_option("--newton-tol", o.newton_tol, "Newton residual tolerance")
        ->check(CLI::PositiveNumber);
    poles->add_option("--max-depth", o.max_depth, "Subdivision depth limit")
        ->check(CLI::Range(1, 40));
    poles->add_option("--margin", o.margin, "Boundary dilation fraction")
        ->check(CLI::PositiveNumber);

    CLI::App* pn = app.add_subcommand("pseudonorm", "Pseudonorm of the zero nearest --k0");
    add_potential_flags(pn, o);
    pn->add_option("--k0", o.k0_text, "Zero estimate, 're,im' or 're+imi'")->required();
    pn->add_option("--newton-tol", o.newton_tol, "Newton residual tolerance")
        ->check(CLI::PositiveNumber);
    pn->add_flag("--trace", o.trace, "Include the damped-integral table");
    pn->add_option("--eps0", o.eps0, "Largest regulator strength (default 0.5/R^2)")
        ->check(CLI::PositiveNumber);
    pn->add_option("--ratio", o.ratio, "Regulator schedule ratio")
        ->check(CLI::Range(1e-3, 0.999));
    pn->add_option("--count", o.count, "Regulator schedule length")->check(CLI::Range(3, 24));

    CLI::App* grid = app.add_subcommand("jost-grid", "Tabulate |f_l| and arg f_l on a lattice");
    add_potential_flags(grid, o);
    grid->add_option("--re", o.re_range, "Re k lattice lo:hi:n")->required();
    grid->add_option("--im", o.im_range, "Im k lattice lo:hi:n")->required();
    grid->add_option("--max-grid", o.max_grid, "Largest allowed point count");

    CLI::App* traj = app.add_subcommand("trajectory", "Track zeros while sweeping V0");
    add_potential_flags(traj, o);
    traj->add_option("--sweep", o.sweep, "Depth sweep [V0=]lo:hi:steps")->required();
    traj->add_option("--re", o.re_range, "Initial scan Re range lo:hi")->required();
    traj->add_option("--im", o.im_range, "Initial scan Im range lo:hi")->required();
    traj->add_option("--newton-tol", o.newton_tol, "Newton residual tolerance")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (poles->parsed()) return run_poles(o);
        if (pn->parsed()) return run_pseudonorm(o);
        if (grid->parsed()) return run_grid(o);
        if (traj->parsed()) return run_trajectory(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
