#include "heatlab/heat.hpp"

#include <cmath>

#include "heatlab/errors.hpp"
#include "heatlab/fourier.hpp"
#include "heatlab/rng.hpp"

namespace heatlab {

SchemeParams SchemeParams::from_grid(int eta, long long nu) {
    if (eta < 2) throw std::invalid_argument("SchemeParams: need eta >= 2");
    if (nu < 1) throw std::invalid_argument("SchemeParams: need nu >= 1");
    const double w = static_cast<double>(eta) * eta / (4.0 * pi * pi * nu);
    return SchemeParams{eta, nu, w, w <= 0.5};
}

SchemeParams SchemeParams::with_weight(int eta, double weight, long long nu) {
    if (eta < 2) throw std::invalid_argument("SchemeParams: need eta >= 2");
    if (!(weight >= 0.0)) throw std::invalid_argument("SchemeParams: weight must be nonnegative");
    return SchemeParams{eta, nu, weight, weight <= 0.5};
}

GridFunction ftcs_step(const GridFunction& f, const SchemeParams& params) {
    if (f.grid.eta != params.eta)
        throw std::invalid_argument("ftcs_step: grid does not match params");
    const int s = f.size();
    const double w = params.weight;
    const double center = 1.0 - 2.0 * w;
    GridFunction out(f.grid);
    for (int j = 0; j < s; ++j)
        out.values[j] = w * f.values[(j + 2) % s] + center * f.values[j] +
                        w * f.values[(j + s - 2) % s];
    return out;
}

GridFunction ftcs_advance(GridFunction f, const SchemeParams& params, long long n_steps,
                          const std::function<void(long long, const GridFunction&)>& on_row) {
    if (n_steps < 0) throw std::invalid_argument("ftcs_advance: negative step count");
    if (on_row) on_row(0, f);
    for (long long k = 1; k <= n_steps; ++k) {
        f = ftcs_step(f, params);
        if (on_row) on_row(k, f);
    }
    return f;
}

HeatSolution solve_time_domain(const GridFunction& f, const SchemeParams& params,
                               long long n_steps) {
    if (n_steps < 0) throw std::invalid_argument("solve_time_domain: negative step count");
    const long long cells = (n_steps + 1) * static_cast<long long>(f.size());
    if (cells > cell_budget())
        throw resource_error("solve_time_domain: field exceeds cell budget; use ftcs_advance");
    const long long nu = params.nu > 0 ? params.nu : 1;
    HeatSolution sol{params, SpaceTimeField(f.grid, TimeGrid(static_cast<int>(nu), n_steps, true)),
                     f};
    sol.field.rows[0] = f;
    for (long long k = 1; k <= n_steps; ++k)
        sol.field.rows[static_cast<size_t>(k)] =
            ftcs_step(sol.field.rows[static_cast<size_t>(k - 1)], params);
    return sol;
}

double step_multiplier(const SchemeParams& params, int m) {
    const double s = std::sin(pi * m / params.eta);
    return 1.0 - 4.0 * params.weight * s * s;
}

GridFunction solve_spectral(const GridFunction& f, const SchemeParams& params, double t) {
    if (f.grid.eta != params.eta)
        throw std::invalid_argument("solve_spectral: grid does not match params");
    if (params.nu < 1)
        throw std::invalid_argument("solve_spectral: params carry no time grid");
    if (t < 0.0) throw std::invalid_argument("solve_spectral: negative time");
    const long long steps = static_cast<long long>(std::floor(t * params.nu));
    FourierCoeffs coeffs = fourier_coeffs(f);
    for (int m = -params.eta; m <= params.eta - 1; ++m)
        coeffs.at(m) *= std::pow(step_multiplier(params, m), static_cast<double>(steps));
    return inverse(coeffs);
}

cplx ClassicalSolution::eval(double x, double t) const {
    cplx acc(0.0);
    for (const auto& [m, c] : coeffs)
        acc += std::exp(-static_cast<double>(m) * m * t) * c * std::polar(1.0, m * x);
    return acc;
}

ClassicalSolution classical_solution(const std::function<double(double)>& g, int m_max) {
    if (m_max < 1) throw std::invalid_argument("classical_solution: need m_max >= 1");
    const int quad_points = std::max(16 * m_max, 64);
    ClassicalSolution sol{m_max, {}, 0.0, std::abs(g(-pi) - g(pi)) > 1e-8};
    // periodic rectangle rule: spectrally accurate for smooth data
    for (int m = -m_max; m <= m_max; ++m) {
        cplx acc(0.0);
        for (int q = 0; q < quad_points; ++q) {
            const double x = -pi + 2.0 * pi * q / quad_points;
            acc += g(x) * std::polar(1.0, -m * x);
        }
        sol.coeffs[m] = acc / static_cast<double>(quad_points);
    }
    double c_meas = 0.0;
    for (const auto& [m, c] : sol.coeffs)
        if (m != 0) c_meas = std::max(c_meas, static_cast<double>(m) * m * std::abs(c));
    // sum_{|m| > M} C/m^2 < 2C/M
    sol.tail_bound = 2.0 * c_meas / m_max;
    return sol;
}

double compare_to_classical(const std::function<double(double)>& g, const SchemeParams& params,
                            double t, int m_max) {
    if (!params.stable)
        throw std::invalid_argument("compare_to_classical: refusing unstable parameters");
    const GridFunction f = sample_real(g, params.eta);
    const GridFunction numeric = solve_spectral(f, params, t);
    const ClassicalSolution classical = classical_solution(g, m_max);
    double sup = 0.0;
    for (int j = 0; j < f.size(); ++j)
        sup = std::max(sup, std::abs(numeric.values[j] - classical.eval(f.grid.point(j), t)));
    return sup;
}

double equilibrium_gap(const GridFunction& f, const SchemeParams& params, double t) {
    if (!params.stable)
        throw std::invalid_argument("equilibrium_gap: refusing unstable parameters");
    const cplx mean = integrate(f) / (2.0 * pi);
    const GridFunction evolved = solve_spectral(f, params, t);
    double sup = 0.0;
    for (const cplx& v : evolved.values) sup = std::max(sup, std::abs(v - mean));
    return sup;
}

EquivalenceReport markov_equivalence_check(int eta, long long n_steps,
                                           const std::vector<double>& even_values, double tol) {
    if (eta % 2 != 0)
        throw std::invalid_argument("markov_equivalence_check: eta must be even");
    if (static_cast<int>(even_values.size()) != eta)
        throw std::invalid_argument("markov_equivalence_check: need eta sublattice values");
    if (n_steps < 1) throw std::invalid_argument("markov_equivalence_check: need n_steps >= 1");

    const SchemeParams params = SchemeParams::with_weight(eta, 1.0 / 3.0);
    // Odd cells start at 0; the +-2 stencil never reads them from even cells.
    GridFunction f{CircleGrid(eta)};
    for (int i = 0; i < eta; ++i) f.values[2 * i] = cplx(even_values[i], 0.0);

    const CyclicChain chain(eta);
    DistributionD d = DistributionD::from_weights(even_values);

    double max_dev = 0.0;
    for (long long k = 1; k <= n_steps; ++k) {
        f = ftcs_step(f, params);
        d.weights = kernel_apply(eta, d.weights);
        for (int i = 0; i < eta; ++i)
            max_dev = std::max(max_dev, std::abs(f.values[2 * i] - cplx(d.weights[i], 0.0)));
    }
    return EquivalenceReport{eta, n_steps, max_dev, max_dev <= tol};
}

EquivalenceReport markov_equivalence_check(int eta, long long n_steps, uint64_t seed, double tol) {
    if (eta % 2 != 0)
        throw std::invalid_argument("markov_equivalence_check: eta must be even");
    std::vector<double> values(eta);
    SplitMix64 rng(split_seed(seed, 0));
    for (double& v : values) v = rng.next_unit();
    return markov_equivalence_check(eta, n_steps, values, tol);
}

} // namespace heatlab
