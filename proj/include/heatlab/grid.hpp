#pragma once

#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace heatlab {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

// 2*eta cells of width pi/eta covering [-pi, pi); x_j = -pi + pi*j/eta.
// Total measure 2*pi.
struct CircleGrid {
    int eta;

    explicit CircleGrid(int eta_) : eta(eta_) {
        if (eta_ < 2) throw std::invalid_argument("CircleGrid: need eta >= 2");
    }

    int size() const { return 2 * eta; }
    double point(int j) const { return -pi + pi * static_cast<double>(j) / eta; }
    double cell_weight() const { return pi / eta; }

    bool operator==(const CircleGrid&) const = default;
};

// Uniform step 1/nu; times t_k = k/nu for k = 0..n_steps. The natural
// horizon is nu^2 steps; longer runs must say so explicitly.
struct TimeGrid {
    int nu;
    long long n_steps;

    TimeGrid(int nu_, long long n_steps_, bool allow_beyond_horizon = false)
        : nu(nu_), n_steps(n_steps_) {
        if (nu_ < 1) throw std::invalid_argument("TimeGrid: need nu >= 1");
        if (n_steps_ < 0) throw std::invalid_argument("TimeGrid: negative step count");
        if (!allow_beyond_horizon &&
            n_steps_ > static_cast<long long>(nu_) * static_cast<long long>(nu_))
            throw std::invalid_argument("TimeGrid: n_steps beyond nu^2 horizon (pass override)");
    }

    double time(long long k) const { return static_cast<double>(k) / nu; }

    bool operator==(const TimeGrid&) const = default;
};

struct GridFunction {
    CircleGrid grid;
    std::vector<cplx> values; // values[j] on cell j, length 2*eta

    explicit GridFunction(CircleGrid g) : grid(g), values(g.size(), cplx(0.0)) {}
    GridFunction(CircleGrid g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
        if (static_cast<int>(values.size()) != grid.size())
            throw std::invalid_argument("GridFunction: value count does not match grid");
    }

    int size() const { return grid.size(); }
    cplx& operator[](int j) { return values[j]; }
    const cplx& operator[](int j) const { return values[j]; }
};

enum class ShiftDir { left, right };

// Central difference (eta/2pi)(f(x_{j+1}) - f(x_{j-1})), cyclic indices.
GridFunction d_dx(const GridFunction& f);

// d_dx twice: (eta^2/4pi^2)(f(x_{j+2}) - 2 f(x_j) + f(x_{j-2})).
GridFunction d2_dx(const GridFunction& f);

// left: f(x_{j+1}); right: f(x_{j-1}); cyclic.
GridFunction shift(const GridFunction& f, ShiftDir dir);

// (pi/eta) * sum_j f(x_j)
cplx integrate(const GridFunction& f);

// Keep the even-index points: a function on CircleGrid(eta/2). Requires
// even eta.
GridFunction restrict_even(const GridFunction& f);

// Pointwise sampling of a (2pi-periodic) function at the grid points.
GridFunction sample(const std::function<cplx(double)>& g, int eta);
GridFunction sample_real(const std::function<double(double)>& g, int eta);

// Pointwise algebra used throughout the identity checks.
GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(const GridFunction& a, const GridFunction& b);
GridFunction operator*(cplx s, const GridFunction& a);

double sup_norm(const GridFunction& f);
double sup_distance(const GridFunction& a, const GridFunction& b);

// Space-time data: rows[k] is the slice at t_k = k/nu.
struct SpaceTimeField {
    CircleGrid grid;
    TimeGrid tgrid;
    std::vector<GridFunction> rows; // n_steps + 1 rows

    SpaceTimeField(CircleGrid g, TimeGrid t)
        : grid(g), tgrid(t), rows(static_cast<size_t>(t.n_steps) + 1, GridFunction(g)) {}
};

// Forward difference nu*(F_{k+1} - F_k) on rows 0..n_steps-1; the terminal
// row's time derivative is defined as 0.
SpaceTimeField d_dt(const SpaceTimeField& F);

// Row-wise space operations.
SpaceTimeField d_dx(const SpaceTimeField& F);
SpaceTimeField d2_dx(const SpaceTimeField& F);
SpaceTimeField shift_x(const SpaceTimeField& F, ShiftDir dir);

// Cyclic shift across time rows.
SpaceTimeField shift_t(const SpaceTimeField& F, ShiftDir dir);

// (pi/eta)(1/nu) * sum over all cells
cplx integrate_xt(const SpaceTimeField& F);

SpaceTimeField operator*(const SpaceTimeField& a, const SpaceTimeField& b);

} // namespace heatlab
