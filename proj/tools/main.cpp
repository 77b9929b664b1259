#include "ostrowski/bounds.hpp"
#include "ostrowski/error.hpp"
#include "ostrowski/harness/checks.hpp"
#include "ostrowski/harness/discrepancy.hpp"
#include "ostrowski/harness/report.hpp"
#include "ostrowski/harness/sharpness.hpp"
#include "ostrowski/io.hpp"
#include "ostrowski/prob.hpp"
#include "ostrowski/quadrature.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace ostrowski;

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kInputError = 2;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path);
    if (!os) {
        throw ParseError("", "cannot write '" + out_path + "'");
    }
    os << text;
}

std::optional<HolderExponent> holder_from(const std::optional<double>& p) {
    if (!p) {
        return std::nullopt;
    }
    return HolderExponent(*p);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Companion-of-Ostrowski bounds for piecewise monotone functions"};
    app.require_subcommand(1);

    std::string fn_path, cdf_path, out_path, cells_csv, report_path, cert = "refined", family;
    double x = 0.0;
    std::optional<double> p;
    std::optional<std::size_t> cells;
    std::optional<double> tol;
    double lambda = 0.25;
    int p_int = 2;
    std::uint64_t seed = 1;
    std::size_t count = 1000;
    std::optional<std::size_t> cdf_count;
    std::size_t grid = 65;
    std::vector<double> p_list{1.5, 2.0, 3.0, 4.0};
    std::vector<double> eps_list;

    CLI::App* bound = app.add_subcommand("bound", "Every member of the bound chain at x");
    bound->add_option("--fn", fn_path, "Function file (JSON)")->required();
    bound->add_option("--x", x, "Point in [a, (a+b)/2]")->required();
    bound->add_option("--p", p, "Hölder exponent p > 1");
    bound->add_option("--out", out_path, "Write JSON here instead of stdout");

    CLI::App* integrate = app.add_subcommand("integrate", "Certified composite or adaptive quadrature");
    integrate->add_option("--fn", fn_path, "Function file (JSON)")->required();
    auto* cells_opt = integrate->add_option("--cells", cells, "Uniform cell count");
    auto* tol_opt = integrate->add_option("--tol", tol, "Adaptive target for the total bound");
    cells_opt->excludes(tol_opt);
    integrate->add_option("--lambda", lambda, "Evaluation offset in [0, 1/2]");
    integrate->add_option("--cert", cert, "coarse or refined")
        ->check(CLI::IsMember({"coarse", "refined"}));
    integrate->add_option("--out", out_path, "Write JSON here instead of stdout");
    integrate->add_option("--cells-csv", cells_csv, "Per-cell CSV");

    CLI::App* verify = app.add_subcommand("verify", "Check every inequality chain over a random corpus");
    verify->add_option("--seed", seed, "Corpus seed");
    verify->add_option("--count", count, "Number of functions");
    verify->add_option("--cdf-count", cdf_count, "Number of CDFs (default count/5)");
    verify->add_option("--grid", grid, "x grid size on [a, (a+b)/2]");
    verify->add_option("--p-list", p_list, "Hölder exponents")->delimiter(',');
    verify->add_option("--report", report_path, "Violation CSV (default stdout)");

    CLI::App* prob = app.add_subcommand("prob", "Expectation bounds for a CDF");
    prob->add_option("--cdf", cdf_path, "CDF file (JSON, kind=cdf)")->required();
    prob->add_option("--x", x, "Point in [a, (a+b)/2]")->required();
    prob->add_option("--p", p, "Hölder exponent p > 1");
    prob->add_option("--out", out_path, "Write JSON here instead of stdout");

    CLI::App* probe = app.add_subcommand("probe", "Sharpness ratios for box witnesses");
    probe->add_option("--family", family, "outer_quarter, midpoint_half or trapezoid_type_quarter")
        ->required();
    probe->add_option("--eps", eps_list, "Box widths")->delimiter(',')->required();
    probe->add_option("--out", out_path, "Write CSV here instead of stdout");

    CLI::App* disc = app.add_subcommand("discrepancy", "Hölder moment: oracle vs both closed forms");
    disc->add_option("--fn", fn_path, "Function file (JSON)")->required();
    disc->add_option("--x", x, "Point in [a, (a+b)/2]")->required();
    disc->add_option("--p", p_int, "Integer p >= 2")->required();
    disc->add_option("--out", out_path, "Write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (bound->parsed()) {
            const BoundReport r = chain_report(io::load_function(fn_path), x, holder_from(p));
            emit(io::to_json(r), out_path);
            return chain_breaks(r).empty() ? kOk : kViolations;
        }
        if (integrate->parsed()) {
            if (!cells && !tol) {
                throw ArgumentError("integrate: give --cells or --tol");
            }
            const PwmFunction f = io::load_function(fn_path);
            const CellRule rule(lambda);
            const Certification c = certification_from_string(cert);
            const QuadratureResult r =
                cells ? composite_integrate(f, *cells, rule, c) : adaptive_integrate(f, *tol, rule, c);
            emit(io::to_json(r), out_path);
            if (!cells_csv.empty()) {
                std::ofstream os(cells_csv);
                if (!os) {
                    throw ParseError("", "cannot write '" + cells_csv + "'");
                }
                io::write_cells_csv(os, r);
            }
            return r.converged ? kOk : kViolations;
        }
        if (verify->parsed()) {
            harness::VerifyConfig cfg;
            cfg.corpus.seed = seed;
            cfg.corpus.count = count;
            cfg.cdf_count = cdf_count.value_or(count / 5);
            cfg.grid = grid;
            cfg.p_list = p_list;
            for (double pv : p_list) {
                static_cast<void>(HolderExponent(pv));
            }
            const harness::VerifySummary s = harness::verify_corpus(cfg);
            if (report_path.empty()) {
                harness::write_violations_csv(std::cout, s.violations);
            } else {
                std::ofstream os(report_path);
                if (!os) {
                    throw ParseError("", "cannot write '" + report_path + "'");
                }
                harness::write_violations_csv(os, s.violations);
            }
            std::cerr << s.functions << " functions, " << s.cdfs << " cdfs, " << s.checks
                      << " checks, " << s.violations.size() << " violations\n";
            return s.violations.empty() ? kOk : kViolations;
        }
        if (prob->parsed()) {
            const ProbReport r = check_prob_chain(io::load_cdf(cdf_path), x, holder_from(p));
            emit(io::to_json(r), out_path);
            return r.violations.empty() ? kOk : kViolations;
        }
        if (probe->parsed()) {
            const harness::SharpnessFamily fam = harness::sharpness_family_from_string(family);
            std::vector<harness::SharpnessPoint> pts;
            for (double e : eps_list) {
                pts.push_back(harness::sharpness_probe(fam, e));
            }
            std::ostringstream os;
            harness::write_probe_csv(os, pts);
            emit(os.str(), out_path);
            return kOk;
        }
        if (disc->parsed()) {
            const harness::KernelDiscrepancy r =
                harness::kernel_discrepancy_report(io::load_function(fn_path), x, p_int);
            emit(io::to_json(r), out_path);
            return r.corrected_matches ? kOk : kViolations;
        }
    } catch (const ConsistencyError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kViolations;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
