#include "heatlab/experiments.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>

#include "heatlab/cyclic_chain.hpp"
#include "heatlab/errors.hpp"
#include "heatlab/fourier.hpp"
#include "heatlab/heat.hpp"
#include "heatlab/martingale.hpp"
#include "heatlab/presets.hpp"
#include "heatlab/rng.hpp"

namespace heatlab {

namespace {

using clock_type = std::chrono::steady_clock;

long long elapsed_ms(clock_type::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(clock_type::now() - start)
        .count();
}

bool wants_csv(OutputFormat f) { return f != OutputFormat::json; }
bool wants_json(OutputFormat f) { return f != OutputFormat::csv; }

std::string join_path(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

void emit(RunResult& result, const std::string& path, const std::string& content) {
    write_text_file(path, content);
    result.artifacts.push_back(path);
}

void finalize(RunResult& result, const std::string& out_dir, OutputFormat fmt,
              const std::string& json_name, clock_type::time_point start) {
    result.report["runtime_ms"] = elapsed_ms(start);
    // file names only: the report must not depend on where it was written
    json names = json::array();
    for (const std::string& path : result.artifacts)
        names.push_back(std::filesystem::path(path).filename().string());
    result.report["artifacts"] = names;
    result.report["pass"] = result.pass;
    if (wants_json(fmt)) {
        const std::string path = join_path(out_dir, json_name);
        write_text_file(path, result.report.dump(2) + "\n");
        result.artifacts.push_back(path);
    }
}

GridFunction random_complex_grid(int eta, uint64_t seed) {
    SplitMix64 rng(seed);
    GridFunction f{CircleGrid(eta)};
    for (cplx& v : f.values) v = cplx(rng.next_symmetric(), rng.next_symmetric());
    return f;
}

} // namespace

RunResult run_mix(const MixConfig& cfg, const std::string& out_dir, OutputFormat fmt) {
    const auto start = clock_type::now();
    if (cfg.n_max < 1) throw std::invalid_argument("mix: need n-max >= 1");
    const CyclicChain chain(cfg.n_states);
    const bool exact = cfg.exact && cfg.n_states <= 9;
    const bool odd = cfg.n_states % 2 == 1;
    const MixingBound general = MixingBound::general(cfg.n_states);

    std::vector<MixCsvRow> rows;
    rows.reserve(cfg.n_max);
    bool all_within = true;

    std::vector<Rational> exact_row;
    std::vector<double> float_row(cfg.n_states, 0.0);
    if (exact) {
        exact_row.assign(cfg.n_states, Rational(0));
        exact_row[0] = 1;
    }
    float_row[0] = 1.0;

    for (int n = 1; n <= cfg.n_max; ++n) {
        double gap;
        if (exact) {
            exact_row = kernel_apply(cfg.n_states, exact_row);
            Rational g(0);
            const Rational pi_inv(1, cfg.n_states);
            for (const Rational& v : exact_row) {
                const Rational d = rational_abs(v - pi_inv);
                if (d > g) g = d;
            }
            gap = to_double(g);
            if (!mixing_bound_holds_exact(g, cfg.n_states, n, BoundVariant::general))
                all_within = false;
            if (odd && !mixing_bound_holds_exact(g, cfg.n_states, n, BoundVariant::odd))
                all_within = false;
        } else {
            float_row = kernel_apply(cfg.n_states, float_row);
            gap = 0.0;
            for (const double v : float_row)
                gap = std::max(gap, std::abs(v - 1.0 / cfg.n_states));
            if (gap > general.value(n)) all_within = false;
            if (odd && gap > MixingBound::odd(cfg.n_states).value(n)) all_within = false;
        }
        const double delta_n =
            odd ? MixingBound::odd(cfg.n_states).value(n) : std::nan("");
        rows.push_back({n, gap, general.value(n), delta_n});
    }

    RunResult result;
    result.pass = all_within;
    result.report["config"] = {{"subcommand", "mix"},
                               {"N", cfg.n_states},
                               {"n_max", cfg.n_max},
                               {"exact", exact}};
    result.report["checks"] = {{{"name", "tv_gap_within_bounds"}, {"pass", all_within}}};
    result.report["results"] = {{"final_tv_gap", rows.back().tv_gap},
                                {"final_eps_n", rows.back().eps_n}};
    const std::string stem = "mix_N" + std::to_string(cfg.n_states);
    if (wants_csv(fmt)) emit(result, join_path(out_dir, stem + ".csv"), mix_csv(rows));
    finalize(result, out_dir, fmt, stem + ".json", start);
    return result;
}

RunResult run_couple(const CoupleConfig& cfg, const std::string& out_dir, OutputFormat fmt) {
    const auto start = clock_type::now();
    const int m = cfg.n_states - 1;
    const int n_max = cfg.n_max > 0 ? cfg.n_max : 20 * m;

    const CouplingTail exact = coupling_tail_exact(cfg.n_states, n_max, cfg.start_state);
    const std::vector<double> mc =
        simulate_meeting_time(cfg.n_states, cfg.trials, n_max, cfg.seed, cfg.start_state);

    const BigInt p3 = ipow(BigInt(3), m);
    const Rational one_minus_rho(p3 - 1, p3);
    bool bound_ok = true;
    for (int k = 1; k * m <= n_max; ++k)
        if (exact.tail[static_cast<size_t>(k) * m] > rational_pow(one_minus_rho, k))
            bound_ok = false;

    bool mc_ok = true;
    double worst_sigma_units = 0.0;
    std::vector<CoupleCsvRow> rows;
    rows.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        const double p = to_double(exact.tail[n]);
        rows.push_back({n, p, mc[n]});
        const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(cfg.trials));
        const double dev = std::abs(mc[n] - p);
        if (sigma > 0.0) worst_sigma_units = std::max(worst_sigma_units, dev / sigma);
        if (dev > 4.0 * sigma + 1e-12) mc_ok = false;
    }

    RunResult result;
    result.pass = bound_ok && mc_ok;
    result.report["config"] = {{"subcommand", "couple"}, {"N", cfg.n_states},
                               {"n_max", n_max},         {"trials", cfg.trials},
                               {"seed", cfg.seed},       {"start", cfg.start_state}};
    result.report["checks"] = {
        {{"name", "tail_geometric_bound"}, {"pass", bound_ok}},
        {{"name", "monte_carlo_within_4_sigma"}, {"pass", mc_ok}}};
    result.report["results"] = {{"worst_sigma_units", worst_sigma_units},
                                {"exact_tail_final", rows.back().exact_tail}};
    const std::string stem = "couple_N" + std::to_string(cfg.n_states);
    if (wants_csv(fmt)) emit(result, join_path(out_dir, stem + ".csv"), couple_csv(rows));
    finalize(result, out_dir, fmt, stem + ".json", start);
    return result;
}

RunResult run_martingale(const MartingaleConfig& cfg, const std::string& out_dir,
                         OutputFormat fmt) {
    const auto start = clock_type::now();
    std::vector<Rational> initial = cfg.initial;
    if (initial.empty()) {
        initial.assign(cfg.eta, Rational(0));
        initial[0] = 1;
    }

    const ProcessGrid process = build_process(initial, cfg.eta, cfg.nu);
    const AssociationTable assoc =
        build_association(cfg.eta, cfg.nu, std::min<long long>(cell_budget(), 1 << 20));
    const ExtendedProcess ext = extend_process(process, assoc);

    const MartingaleReport mart = verify_reverse_martingale(ext);
    bool dist_ok = true;
    for (int t = 0; t <= cfg.nu; ++t)
        if (!verify_distribution_equality(process, ext, t).pass) dist_ok = false;

    // counting: 3^(nu - j) special points per original point at level j
    bool counting_ok = true;
    long long expected = 1;
    for (int j = cfg.nu; j >= 0; --j) {
        std::vector<long long> per_state(cfg.eta, 0);
        for (const int32_t s : assoc.levels[j].state) ++per_state[s];
        for (const long long c : per_state)
            if (c != expected) counting_ok = false;
        expected *= 3;
    }

    const Rational eq_dev = equilibrium_deviation(process);

    RunResult result;
    result.pass = mart.pass && dist_ok && counting_ok;
    json initial_json = json::array();
    for (const Rational& v : initial) initial_json.push_back(Rational(v).str());
    result.report["config"] = {{"subcommand", "martingale"},
                               {"eta", cfg.eta},
                               {"nu", cfg.nu},
                               {"initial", initial_json}};
    result.report["checks"] = {
        {{"name", "reverse_martingale_identity"}, {"pass", mart.pass}},
        {{"name", "distribution_equality_all_times"}, {"pass", dist_ok}},
        {{"name", "special_point_counting"}, {"pass", counting_ok}}};
    result.report["results"] = {{"equilibrium_deviation", eq_dev.str()},
                                {"finest_cells", static_cast<long long>(ext.rows[0].size())}};

    const std::string stem =
        "martingale_eta" + std::to_string(cfg.eta) + "_nu" + std::to_string(cfg.nu);
    if (wants_json(fmt)) {
        emit(result, join_path(out_dir, stem + "_dump.json"),
             martingale_dump_json(ext).dump(2) + "\n");
    }
    if (wants_csv(fmt))
        emit(result, join_path(out_dir, stem + "_association.csv"), association_csv(assoc));
    finalize(result, out_dir, fmt, stem + ".json", start);
    return result;
}

double CalculusResiduals::max() const {
    double m = product_rule;
    m = std::max(m, parts_first);
    m = std::max(m, parts_second);
    m = std::max(m, shift_commute);
    m = std::max(m, restricted_parts);
    m = std::max(m, space_time);
    return m;
}

CalculusResiduals calculus_residuals(int eta, uint64_t seed) {
    const GridFunction g = random_complex_grid(eta, split_seed(seed, 0));
    const GridFunction h = random_complex_grid(eta, split_seed(seed, 1));

    CalculusResiduals r{};
    r.product_rule = sup_distance(
        d_dx(g * h), d_dx(g) * shift(h, ShiftDir::left) + shift(g, ShiftDir::right) * d_dx(h));
    r.parts_first = std::abs(integrate(d_dx(g) * h) + integrate(g * d_dx(h)));
    r.parts_second = std::abs(integrate(d2_dx(g) * h) - integrate(g * d2_dx(h)));
    r.shift_commute = std::max(
        sup_distance(shift(d_dx(g), ShiftDir::right), d_dx(shift(g, ShiftDir::right))),
        sup_distance(shift(d_dx(g), ShiftDir::left), d_dx(shift(g, ShiftDir::left))));
    r.restricted_parts = 0.0;
    if (eta % 2 == 0) {
        r.restricted_parts = std::abs(
            integrate(restrict_even(d_dx(g) * h)) +
            integrate(restrict_even(shift(g, ShiftDir::right) * shift(d_dx(h), ShiftDir::right))));
    }

    // space-time variants on a short field
    SpaceTimeField G{CircleGrid(eta), TimeGrid(3, 6)};
    SpaceTimeField H{CircleGrid(eta), TimeGrid(3, 6)};
    SplitMix64 rng(split_seed(seed, 2));
    for (auto& row : G.rows)
        for (cplx& v : row.values) v = cplx(rng.next_symmetric(), rng.next_symmetric());
    for (auto& row : H.rows)
        for (cplx& v : row.values) v = cplx(rng.next_symmetric(), rng.next_symmetric());

    double st = std::abs(integrate_xt(d_dx(G)));
    const auto lhs = d_dx(G * H);
    const auto rhs_a = d_dx(G) * shift_x(H, ShiftDir::left);
    const auto rhs_b = shift_x(G, ShiftDir::right) * d_dx(H);
    for (size_t k = 0; k < lhs.rows.size(); ++k)
        st = std::max(st, sup_distance(lhs.rows[k], rhs_a.rows[k] + rhs_b.rows[k]));
    st = std::max(st, std::abs(integrate_xt(d_dx(G) * H) + integrate_xt(G * d_dx(H))));
    st = std::max(st,
                  std::abs(integrate_xt(shift_x(G, ShiftDir::left)) - integrate_xt(G)));
    const auto sc_a = shift_x(d_dx(G), ShiftDir::right);
    const auto sc_b = d_dx(shift_x(G, ShiftDir::right));
    for (size_t k = 0; k < sc_a.rows.size(); ++k)
        st = std::max(st, sup_distance(sc_a.rows[k], sc_b.rows[k]));
    st = std::max(st, std::abs(integrate_xt(d2_dx(G) * H) - integrate_xt(G * d2_dx(H))));
    r.space_time = st;
    return r;
}

RunResult run_calculus(const CalculusConfig& cfg, const std::string& out_dir, OutputFormat fmt) {
    const auto start = clock_type::now();
    if (cfg.n_pairs < 1) throw std::invalid_argument("calculus: need at least one draw");

    CalculusResiduals worst{};
    for (int k = 0; k < cfg.n_pairs; ++k) {
        const CalculusResiduals r =
            calculus_residuals(cfg.eta, split_seed(cfg.seed, static_cast<uint64_t>(k)));
        worst.product_rule = std::max(worst.product_rule, r.product_rule);
        worst.parts_first = std::max(worst.parts_first, r.parts_first);
        worst.parts_second = std::max(worst.parts_second, r.parts_second);
        worst.shift_commute = std::max(worst.shift_commute, r.shift_commute);
        worst.restricted_parts = std::max(worst.restricted_parts, r.restricted_parts);
        worst.space_time = std::max(worst.space_time, r.space_time);
    }

    RunResult result;
    result.pass = worst.max() <= cfg.tol;
    result.report["config"] = {{"subcommand", "calculus"},
                               {"eta", cfg.eta},
                               {"n_pairs", cfg.n_pairs},
                               {"seed", cfg.seed},
                               {"tol", cfg.tol}};
    result.report["checks"] = {{{"name", "identity_residuals"}, {"pass", result.pass}}};
    result.report["residuals"] = {{"product_rule", worst.product_rule},
                                  {"parts_first", worst.parts_first},
                                  {"parts_second", worst.parts_second},
                                  {"shift_commute", worst.shift_commute},
                                  {"restricted_parts", worst.restricted_parts},
                                  {"space_time", worst.space_time},
                                  {"max", worst.max()}};
    finalize(result, out_dir, fmt, "calculus_eta" + std::to_string(cfg.eta) + ".json", start);
    return result;
}

RunResult run_fourier(const FourierConfig& cfg, const std::string& out_dir, OutputFormat fmt) {
    const auto start = clock_type::now();
    GridFunction f = cfg.preset == "random" ? random_complex_grid(cfg.eta, split_seed(cfg.seed, 0))
                                            : preset_grid(cfg.preset, cfg.eta);

    const double roundtrip = sup_distance(inverse(fourier_coeffs(f)), f);
    const DerivativeIdentityReport deriv = derivative_coeff_identity_check(f);

    double restricted = 0.0;
    json decay = json::object();
    bool decay_pass = true;
    if (cfg.eta % 2 == 0) {
        restricted = restricted_coeff_identity_check(f).max_residual;
        const DecayReport d = decay_report(f);
        decay_pass = d.pass();
        decay = {{"f_const", d.f_const}, {"violations", d.violations}};
    }

    // theta(1) -> -1 at the documented quadratic rate
    const double theta1 = theta_symbol(cfg.eta, 1);
    const bool symbol_ok =
        std::abs(theta1 + 1.0) <= pi * pi / (3.0 * static_cast<double>(cfg.eta) * cfg.eta);

    const bool identities_ok =
        roundtrip <= cfg.tol && deriv.max_residual() <= cfg.tol && restricted <= cfg.tol;

    RunResult result;
    result.pass = identities_ok && decay_pass && symbol_ok;
    result.report["config"] = {{"subcommand", "fourier"},
                               {"eta", cfg.eta},
                               {"preset", cfg.preset},
                               {"seed", cfg.seed},
                               {"tol", cfg.tol}};
    result.report["checks"] = {
        {{"name", "inversion_roundtrip"}, {"pass", roundtrip <= cfg.tol}},
        {{"name", "derivative_coefficient_identity"}, {"pass", deriv.max_residual() <= cfg.tol}},
        {{"name", "restricted_coefficient_identity"}, {"pass", restricted <= cfg.tol}},
        {{"name", "coefficient_decay"}, {"pass", decay_pass}},
        {{"name", "theta_symbol_limit"}, {"pass", symbol_ok}}};
    result.report["residuals"] = {{"roundtrip", roundtrip},
                                  {"derivative_first", deriv.first_order},
                                  {"derivative_second", deriv.second_order},
                                  {"restricted", restricted}};
    result.report["results"] = {{"theta_1", theta1}, {"decay", decay}};

    const std::string stem = "fourier_" + cfg.preset + "_eta" + std::to_string(cfg.eta);
    if (wants_csv(fmt)) {
        emit(result, join_path(out_dir, stem + ".csv"), coeffs_csv(fourier_coeffs(f)));
        emit(result, join_path(out_dir, stem + "_function.csv"), grid_csv(f));
    }
    finalize(result, out_dir, fmt, stem + ".json", start);
    return result;
}

RunResult run_heat(const HeatConfig& cfg, const std::string& out_dir, OutputFormat fmt) {
    const auto start = clock_type::now();
    const SchemeParams params = SchemeParams::from_grid(cfg.eta, cfg.nu);
    const auto g = preset_function(cfg.preset);

    double sup_error = std::nan("");
    bool compared = false;
    if (params.stable) {
        sup_error = compare_to_classical(g, params, cfg.t);
        compared = true;
    }

    RunResult result;
    result.pass = compared && sup_error < cfg.tol;
    result.report["config"] = {{"subcommand", "heat"}, {"g", cfg.preset}, {"eta", cfg.eta},
                               {"nu", cfg.nu},         {"t", cfg.t},      {"tol", cfg.tol}};
    result.report["checks"] = {{{"name", "sup_error_vs_classical"}, {"pass", result.pass}}};
    // comparison report in the fixed schema
    json comparison = {{"eta", cfg.eta},
                       {"nu", cfg.nu},
                       {"t", cfg.t},
                       {"sup_error", sup_error},
                       {"stable", params.stable},
                       {"runtime_ms", 0}};
    const std::string stem = "heat_" + cfg.preset + "_eta" + std::to_string(cfg.eta) + "_nu" +
                             std::to_string(cfg.nu);

    if (wants_csv(fmt) && params.stable) {
        const long long steps = static_cast<long long>(std::floor(cfg.t * cfg.nu));
        const GridFunction f0 = sample_real(g, cfg.eta);
        const long long want = std::max(1, cfg.snapshot_rows);
        // snapshots at evenly spaced steps, endpoints included
        std::vector<long long> marks;
        for (long long i = 0; i < want; ++i)
            marks.push_back(want == 1 ? steps : i * steps / (want - 1));
        std::vector<std::pair<double, GridFunction>> snaps;
        size_t next = 0;
        ftcs_advance(f0, params, steps, [&](long long k, const GridFunction& row) {
            while (next < marks.size() && marks[next] == k) {
                snaps.emplace_back(static_cast<double>(k) / cfg.nu, row);
                ++next;
            }
        });
        emit(result, join_path(out_dir, stem + "_snapshots.csv"), snapshot_csv(snaps));
    }

    comparison["runtime_ms"] = elapsed_ms(start);
    result.report["results"] = comparison;
    if (wants_json(fmt)) {
        const std::string path = join_path(out_dir, stem + "_comparison.json");
        write_text_file(path, comparison.dump(2) + "\n");
        result.artifacts.push_back(path);
    }
    finalize(result, out_dir, fmt, stem + ".json", start);
    return result;
}

RunResult run_equilibrium(const EquilibriumConfig& cfg, const std::string& out_dir,
                          OutputFormat fmt) {
    const auto start = clock_type::now();
    const SchemeParams params = SchemeParams::from_grid(cfg.eta, cfg.nu);
    const GridFunction f = preset_grid(cfg.preset, cfg.eta);
    const double gap = equilibrium_gap(f, params, cfg.t);

    RunResult result;
    result.pass = gap <= cfg.tol;
    result.report["config"] = {{"subcommand", "equilibrium"}, {"g", cfg.preset},
                               {"eta", cfg.eta},              {"nu", cfg.nu},
                               {"t", cfg.t},                  {"tol", cfg.tol}};
    result.report["checks"] = {{{"name", "gap_to_mean"}, {"pass", result.pass}}};
    result.report["results"] = {{"gap", gap}, {"stable", params.stable}};
    finalize(result, out_dir, fmt,
             "equilibrium_" + cfg.preset + "_eta" + std::to_string(cfg.eta) + ".json", start);
    return result;
}

RunResult run_equivalence(const EquivalenceConfig& cfg, const std::string& out_dir,
                          OutputFormat fmt) {
    const auto start = clock_type::now();
    const EquivalenceReport rep =
        markov_equivalence_check(cfg.eta, cfg.n_steps, cfg.seed, cfg.tol);

    RunResult result;
    result.pass = rep.pass;
    result.report["config"] = {{"subcommand", "equivalence"},
                               {"eta", cfg.eta},
                               {"steps", cfg.n_steps},
                               {"seed", cfg.seed},
                               {"tol", cfg.tol}};
    result.report["checks"] = {{{"name", "stencil_matches_chain"}, {"pass", rep.pass}}};
    result.report["results"] = {{"max_deviation", rep.max_deviation}};
    finalize(result, out_dir, fmt, "equivalence_eta" + std::to_string(cfg.eta) + ".json", start);
    return result;
}

} // namespace heatlab
