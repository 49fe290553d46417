#pragma once

#include <functional>
#include <map>

#include "heatlab/cyclic_chain.hpp"
#include "heatlab/grid.hpp"

namespace heatlab {

// Explicit scheme F <- w F(x_{j+2}) + (1 - 2w) F(x_j) + w F(x_{j-2}) with
// stencil weight w = eta^2 / (4 pi^2 nu). All three weights are
// nonnegative exactly when w <= 1/2, i.e. eta^2 <= 2 pi^2 nu.
struct SchemeParams {
    int eta;
    long long nu; // 0 when the weight was supplied directly
    double weight;
    bool stable;

    static SchemeParams from_grid(int eta, long long nu);
    // Pins the stencil weight exactly (w = 1/3 is the chain-equivalent
    // regime); no time grid is attached unless nu is given.
    static SchemeParams with_weight(int eta, double weight, long long nu = 0);
};

struct HeatSolution {
    SchemeParams params;
    SpaceTimeField field;
    GridFunction initial;
};

GridFunction ftcs_step(const GridFunction& f, const SchemeParams& params);

// Stores every row; throws resource_error past the cell budget.
HeatSolution solve_time_domain(const GridFunction& f, const SchemeParams& params,
                               long long n_steps);

// Streaming form: returns the final row, invoking on_row(k, row) for each
// k = 0..n_steps.
GridFunction ftcs_advance(GridFunction f, const SchemeParams& params, long long n_steps,
                          const std::function<void(long long, const GridFunction&)>& on_row = {});

// Fourier multiplier of one stencil application on mode m:
// 1 - 4 w sin^2(pi m / eta) = 1 + theta(m)/nu for grid-derived weights.
// Valid for every m in Z_eta.
double step_multiplier(const SchemeParams& params, int m);

// Multiplies each coefficient by step_multiplier^floor(nu t) and inverts.
// Agrees with time stepping at matching steps up to rounding.
GridFunction solve_spectral(const GridFunction& f, const SchemeParams& params, double t);

// Truncated separated-variables solution of dG/dt = d^2G/dx^2 with smooth
// 2pi-periodic initial data g: G(x,t) = sum_{|m|<=m_max} e^{-m^2 t} c_m e^{imx},
// coefficients from high-resolution periodic quadrature.
struct ClassicalSolution {
    int m_max;
    std::map<int, cplx> coeffs;
    double tail_bound;      // sum_{|m|>m_max} C/m^2 with measured C = max |m^2 c_m|
    bool periodic_warning;  // |g(-pi) - g(pi)| above tolerance

    cplx eval(double x, double t) const;
};

ClassicalSolution classical_solution(const std::function<double(double)>& g, int m_max);

// sup over grid points of |spectral solve - G(x_j, t)|; refuses unstable
// parameter sets.
double compare_to_classical(const std::function<double(double)>& g, const SchemeParams& params,
                            double t, int m_max = 32);

// sup_x |solve_spectral(f, t)(x) - (1/2pi) integral(f)|.
double equilibrium_gap(const GridFunction& f, const SchemeParams& params, double t);

// With w pinned to exactly 1/3, k stencil steps restricted to the even
// sublattice coincide with k steps of the eta-state cyclic chain.
struct EquivalenceReport {
    int eta;
    long long n_steps;
    double max_deviation;
    bool pass;
};

EquivalenceReport markov_equivalence_check(int eta, long long n_steps,
                                           const std::vector<double>& even_values,
                                           double tol = 1e-12);
EquivalenceReport markov_equivalence_check(int eta, long long n_steps, uint64_t seed = 0,
                                           double tol = 1e-12);

} // namespace heatlab
