// pastlife command line: evaluate past-lifetime information measures at a
// point, sweep curves over t-grids, run the verification suite, and produce
// Monte Carlo cross-checks. Exit codes: 0 ok, 1 verification failure,
// 2 parse failure, 3 domain error, 4 numerical non-convergence.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pastlife/curve.hpp"
#include "pastlife/errors.hpp"
#include "pastlife/mc.hpp"
#include "pastlife/measures.hpp"
#include "pastlife/properties.hpp"
#include "pastlife/spec_parse.hpp"

namespace {

using namespace pastlife;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitDomainError = 3;
constexpr int kExitNoConvergence = 4;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct GlobalOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_subdiv = 2000;
    std::int64_t mc_samples = 1'000'000;
    std::uint64_t seed = 20240915;
    std::string out = "-";
    std::string format = "csv";
    bool serial = false;

    measures::QuadratureConfig quad() const {
        measures::QuadratureConfig q;
        q.abs_tol = abs_tol;
        q.rel_tol = rel_tol;
        q.max_subdivisions = max_subdiv;
        return q;
    }
};

std::ostream& open_output(const GlobalOptions& g, std::ofstream& file) {
    if (g.out == "-") return std::cout;
    file.open(g.out);
    if (!file) throw std::domain_error("cannot open output file '" + g.out + "'");
    return file;
}

int cmd_eval(const GlobalOptions& g, const std::string& spec, const std::string& measure,
             double t, double alpha) {
    const DistPtr dist = parse_distribution_spec(spec);
    const measures::MeasureValue v =
        measures::evaluate_by_name(*dist, measure, t, g.quad(), alpha);
    std::cout << "value  " << fmt12(v.value) << "\n";
    std::cout << "error  " << fmt12(v.numerical_error) << "\n";
    std::cout << "method " << measures::to_string(v.method) << "\n";
    return 0;
}

int cmd_curve(const GlobalOptions& g, const std::string& spec,
              const std::vector<std::string>& measures_list, double t_min, double t_max,
              int points, double alpha) {
    const DistPtr dist = parse_distribution_spec(spec);
    const curve::CurveTable table = curve::compute_curve(
        *dist, spec, measures_list, t_min, t_max, points, g.quad(), alpha, !g.serial);
    std::ofstream file;
    std::ostream& os = open_output(g, file);
    if (g.format == "json")
        curve::write_json(table, os);
    else
        curve::write_csv(table, os);
    return 0;
}

int cmd_verify(const GlobalOptions& g, const std::string& spec, const std::string& only) {
    const DistPtr dist = parse_distribution_spec(spec);
    properties::CheckConfig cfg;
    cfg.quad = g.quad();
    const auto lines = properties::run_standard_suite(dist, cfg);

    std::printf("%-42s %-16s %-5s %s\n", "check", "applicable", "pass", "max-residual");
    bool any_fail = false;
    for (const auto& line : lines) {
        if (!only.empty() && line.name.find(only) == std::string::npos) continue;
        const std::string applicable =
            line.applicable ? "yes" : ("no");
        std::printf("%-42s %-16s %-5s %s\n", line.name.c_str(), applicable.c_str(),
                    line.applicable ? (line.pass ? "yes" : "NO") : "-",
                    line.applicable ? fmt12(line.max_residual).c_str() : "-");
        if (!line.note.empty()) std::printf("    note: %s\n", line.note.c_str());
        if (line.applicable && !line.pass) any_fail = true;
    }
    return any_fail ? kExitVerifyFailure : 0;
}

int cmd_mc(const GlobalOptions& g, const std::string& spec, const std::string& measure,
           double t) {
    const DistPtr dist = parse_distribution_spec(spec);
    const measures::PastContext ctx(*dist, t);
    mc::MCConfig cfg;
    cfg.n_samples = g.mc_samples;
    cfg.seed = g.seed;

    mc::MCEstimate est;
    if (measure == "past-entropy") {
        est = mc::mc_past_entropy(ctx, cfg, !g.serial);
    } else if (measure == "past-varentropy") {
        est = mc::mc_past_varentropy(ctx, cfg, !g.serial);
    } else if (measure == "mean-inactivity-time") {
        est = mc::mc_inactivity_moments(ctx, cfg, !g.serial).first;
    } else if (measure == "variance-inactivity-time") {
        est = mc::mc_inactivity_moments(ctx, cfg, !g.serial).second;
    } else {
        throw parse_error("measure '" + measure + "' has no Monte Carlo estimator");
    }
    std::cout << "mean        " << fmt12(est.mean) << "\n";
    std::cout << "std_error   " << fmt12(est.std_error) << "\n";
    std::cout << "n_effective " << est.n_effective << "\n";
    std::cout << "rng         " << mc::kRngAlgorithm << " seed=" << cfg.seed << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Information and reliability measures of past lifetimes"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOptions g;
    app.add_option("--abs-tol", g.abs_tol, "Quadrature absolute tolerance");
    app.add_option("--rel-tol", g.rel_tol, "Quadrature relative tolerance");
    app.add_option("--max-subdiv", g.max_subdiv, "Quadrature subdivision budget");
    app.add_option("--mc-samples", g.mc_samples, "Monte Carlo sample count");
    app.add_option("--seed", g.seed, "Monte Carlo seed");
    app.add_option("--out", g.out, "Output path ('-' for stdout)");
    app.add_option("--format", g.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--serial", g.serial, "Disable parallel evaluation");

    std::string spec, measure = "past-entropy", only;
    std::vector<std::string> measures_list;
    double t = 0.0, alpha = 0.0, t_min = 0.0, t_max = 0.0;
    int points = 0;

    CLI::App* eval = app.add_subcommand("eval", "Evaluate one measure at one t");
    eval->add_option("--dist", spec, "Distribution spec")->required();
    eval->add_option("--measure", measure, "Measure name")->required();
    eval->add_option("--t", t, "Time point");
    eval->add_option("--alpha", alpha, "Order of the generalized reversed hazard");

    CLI::App* curve_cmd = app.add_subcommand("curve", "Sweep measures over a t-grid");
    curve_cmd->add_option("--dist", spec, "Distribution spec")->required();
    curve_cmd->add_option("--measures", measures_list, "Comma-separated measure names")
        ->required()
        ->delimiter(',');
    curve_cmd->add_option("--t-min", t_min, "Grid start")->required();
    curve_cmd->add_option("--t-max", t_max, "Grid end")->required();
    curve_cmd->add_option("--points", points, "Grid size")->required();
    curve_cmd->add_option("--alpha", alpha, "Order of the generalized reversed hazard");

    CLI::App* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--dist", spec, "Distribution spec")->required();
    verify->add_option("--checks", only, "Run only checks whose name contains this");

    CLI::App* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimate of a past measure");
    mc_cmd->add_option("--dist", spec, "Distribution spec")->required();
    mc_cmd->add_option("--measure", measure, "Measure name")->required();
    mc_cmd->add_option("--t", t, "Time point")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParseError;
    }

    try {
        if (app.got_subcommand(eval)) return cmd_eval(g, spec, measure, t, alpha);
        if (app.got_subcommand(curve_cmd))
            return cmd_curve(g, spec, measures_list, t_min, t_max, points, alpha);
        if (app.got_subcommand(verify)) return cmd_verify(g, spec, only);
        if (app.got_subcommand(mc_cmd)) return cmd_mc(g, spec, measure, t);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const convergence_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return 0;
}
