// Batch experiment runner: every verification and solver as a subcommand
// with CSV/JSON artifacts for plotting and CI.
//
// Exit codes: 0 all checks pass, 1 check failure, 2 usage error,
// 3 resource budget exceeded.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "heatlab/errors.hpp"
#include "heatlab/experiments.hpp"
#include "heatlab/presets.hpp"

using namespace heatlab;

namespace {

OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    if (s == "both") return OutputFormat::both;
    throw CLI::ValidationError("--format must be csv, json or both");
}

std::vector<Rational> parse_initial(const std::string& text, int eta) {
    if (text.empty()) return {};
    if (text == "delta" || text == "uniform" || text == "ramp")
        return preset_chain_initial(text, eta);
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.emplace_back(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--initial entries must be integers or fractions");
        }
    }
    return out;
}

void print_summary(const RunResult& result) {
    for (const auto& check : result.report["checks"])
        std::cout << (check["pass"].get<bool>() ? "PASS " : "FAIL ")
                  << check["name"].get<std::string>() << "\n";
    for (const std::string& path : result.artifacts) std::cout << "wrote " << path << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic-chain mixing, coupling, exact reverse martingales, discrete "
                 "Fourier analysis and an explicit heat solver on the circle grid"};
    app.require_subcommand(1);
    app.fallthrough(); // --out/--format may follow the subcommand

    std::string out_dir = ".";
    std::string format = "both";
    app.add_option("--out", out_dir, "output directory for artifacts");
    app.add_option("--format", format, "artifact format: csv, json or both");

    MixConfig mix;
    auto* cmd_mix = app.add_subcommand("mix", "total-variation gap against the mixing bounds");
    cmd_mix->add_option("--N", mix.n_states, "state count")->check(CLI::Range(2, 1000));
    cmd_mix->add_option("--n-max", mix.n_max, "largest step count")->check(CLI::PositiveNumber);
    cmd_mix->add_flag("--exact,!--float", mix.exact, "exact-rational verification (N <= 9)");

    CoupleConfig couple;
    auto* cmd_couple =
        app.add_subcommand("couple", "coupling meeting-time tail, exact and Monte Carlo");
    cmd_couple->add_option("--N", couple.n_states, "state count")->check(CLI::Range(2, 40));
    cmd_couple->add_option("--n-max", couple.n_max, "tail length (default 20 blocks)");
    cmd_couple->add_option("--trials", couple.trials, "Monte Carlo trials")
        ->check(CLI::PositiveNumber);
    cmd_couple->add_option("--seed", couple.seed, "RNG seed");
    cmd_couple->add_option("--start", couple.start_state, "start state of the first copy");

    MartingaleConfig mart;
    std::string initial_spec;
    auto* cmd_mart =
        app.add_subcommand("martingale", "exact ternary reverse-martingale construction");
    cmd_mart->add_option("--eta", mart.eta, "states")->check(CLI::Range(2, 100000));
    cmd_mart->add_option("--nu", mart.nu, "time levels")->check(CLI::PositiveNumber);
    cmd_mart->add_option("--initial", initial_spec,
                         "comma list of rationals, or delta/uniform/ramp");

    CalculusConfig calc;
    auto* cmd_calc =
        app.add_subcommand("calculus", "discrete derivative and shift identity suite");
    cmd_calc->add_option("--eta", calc.eta, "grid half-size")->check(CLI::Range(2, 100000));
    cmd_calc->add_option("--n-funcs", calc.n_pairs, "random draws")->check(CLI::PositiveNumber);
    cmd_calc->add_option("--seed", calc.seed, "RNG seed");
    cmd_calc->add_option("--tol", calc.tol, "residual tolerance");

    FourierConfig fourier;
    auto* cmd_fourier =
        app.add_subcommand("fourier", "coefficients, inversion, symbols and decay");
    cmd_fourier->add_option("--eta", fourier.eta, "grid half-size")->check(CLI::Range(2, 100000));
    cmd_fourier->add_option("--g", fourier.preset, "preset name or 'random'");
    cmd_fourier->add_option("--seed", fourier.seed, "seed for --g random");
    cmd_fourier->add_option("--tol", fourier.tol, "residual tolerance");

    HeatConfig heat;
    auto* cmd_heat = app.add_subcommand("heat", "explicit solver against the classical solution");
    cmd_heat->add_option("--g", heat.preset, "initial condition preset");
    cmd_heat->add_option("--eta", heat.eta, "grid half-size")->check(CLI::Range(2, 100000));
    cmd_heat->add_option("--nu", heat.nu, "time resolution")->check(CLI::PositiveNumber);
    cmd_heat->add_option("--t", heat.t, "compare at time t")->check(CLI::NonNegativeNumber);
    cmd_heat->add_option("--tol", heat.tol, "sup-error tolerance");
    cmd_heat->add_option("--snapshots", heat.snapshot_rows, "snapshot rows in the CSV");

    EquilibriumConfig equi;
    auto* cmd_equi = app.add_subcommand("equilibrium", "late-time gap to the mean");
    cmd_equi->add_option("--g", equi.preset, "initial condition preset");
    cmd_equi->add_option("--eta", equi.eta, "grid half-size")->check(CLI::Range(2, 100000));
    cmd_equi->add_option("--nu", equi.nu, "time resolution")->check(CLI::PositiveNumber);
    cmd_equi->add_option("--t", equi.t, "evaluation time")->check(CLI::NonNegativeNumber);
    cmd_equi->add_option("--tol", equi.tol, "gap tolerance");

    EquivalenceConfig equiv;
    auto* cmd_equiv =
        app.add_subcommand("equivalence", "w = 1/3 stencil against the cyclic chain");
    cmd_equiv->add_option("--eta", equiv.eta, "chain states (even)")->check(CLI::Range(2, 100000));
    cmd_equiv->add_option("--steps", equiv.n_steps, "steps to compare")
        ->check(CLI::PositiveNumber);
    cmd_equiv->add_option("--seed", equiv.seed, "seed for the random initial data");
    cmd_equiv->add_option("--tol", equiv.tol, "deviation tolerance");

    auto* cmd_presets = app.add_subcommand("presets", "list named initial conditions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        const OutputFormat fmt = parse_format(format);
        RunResult result;
        if (cmd_presets->parsed()) {
            for (const std::string& name : preset_names()) std::cout << name << "\n";
            return 0;
        } else if (cmd_mix->parsed()) {
            result = run_mix(mix, out_dir, fmt);
        } else if (cmd_couple->parsed()) {
            result = run_couple(couple, out_dir, fmt);
        } else if (cmd_mart->parsed()) {
            mart.initial = parse_initial(initial_spec, mart.eta);
            result = run_martingale(mart, out_dir, fmt);
        } else if (cmd_calc->parsed()) {
            result = run_calculus(calc, out_dir, fmt);
        } else if (cmd_fourier->parsed()) {
            result = run_fourier(fourier, out_dir, fmt);
        } else if (cmd_heat->parsed()) {
            result = run_heat(heat, out_dir, fmt);
        } else if (cmd_equi->parsed()) {
            result = run_equilibrium(equi, out_dir, fmt);
        } else if (cmd_equiv->parsed()) {
            result = run_equivalence(equiv, out_dir, fmt);
        }
        print_summary(result);
        return result.pass ? 0 : 1;
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
}
