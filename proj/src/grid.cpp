#include "heatlab/grid.hpp"

#include <algorithm>
#include <cmath>

namespace heatlab {

GridFunction d_dx(const GridFunction& f) {
    const int s = f.size();
    const double scale = f.grid.eta / (2.0 * pi);
    GridFunction out(f.grid);
    for (int j = 0; j < s; ++j)
        out.values[j] = scale * (f.values[(j + 1) % s] - f.values[(j + s - 1) % s]);
    return out;
}

GridFunction d2_dx(const GridFunction& f) { return d_dx(d_dx(f)); }

GridFunction shift(const GridFunction& f, ShiftDir dir) {
    const int s = f.size();
    GridFunction out(f.grid);
    for (int j = 0; j < s; ++j)
        out.values[j] = dir == ShiftDir::left ? f.values[(j + 1) % s]
                                              : f.values[(j + s - 1) % s];
    return out;
}

cplx integrate(const GridFunction& f) {
    cplx sum(0.0);
    for (const cplx& v : f.values) sum += v;
    return f.grid.cell_weight() * sum;
}

GridFunction restrict_even(const GridFunction& f) {
    if (f.grid.eta % 2 != 0)
        throw std::invalid_argument("restrict_even: eta must be even");
    GridFunction out{CircleGrid(f.grid.eta / 2)};
    for (int i = 0; i < f.grid.eta; ++i) out.values[i] = f.values[2 * i];
    return out;
}

GridFunction sample(const std::function<cplx(double)>& g, int eta) {
    GridFunction out{CircleGrid(eta)};
    for (int j = 0; j < out.size(); ++j) out.values[j] = g(out.grid.point(j));
    return out;
}

GridFunction sample_real(const std::function<double(double)>& g, int eta) {
    GridFunction out{CircleGrid(eta)};
    for (int j = 0; j < out.size(); ++j) out.values[j] = cplx(g(out.grid.point(j)), 0.0);
    return out;
}

namespace {
void require_same_grid(const GridFunction& a, const GridFunction& b) {
    if (!(a.grid == b.grid))
        throw std::invalid_argument("grid mismatch in pointwise operation");
}
} // namespace

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b);
    GridFunction out = a;
    for (int j = 0; j < a.size(); ++j) out.values[j] += b.values[j];
    return out;
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b);
    GridFunction out = a;
    for (int j = 0; j < a.size(); ++j) out.values[j] -= b.values[j];
    return out;
}

GridFunction operator*(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b);
    GridFunction out = a;
    for (int j = 0; j < a.size(); ++j) out.values[j] *= b.values[j];
    return out;
}

GridFunction operator*(cplx s, const GridFunction& a) {
    GridFunction out = a;
    for (cplx& v : out.values) v *= s;
    return out;
}

double sup_norm(const GridFunction& f) {
    double m = 0.0;
    for (const cplx& v : f.values) m = std::max(m, std::abs(v));
    return m;
}

double sup_distance(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b);
    double m = 0.0;
    for (int j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a.values[j] - b.values[j]));
    return m;
}

SpaceTimeField d_dt(const SpaceTimeField& F) {
    if (F.tgrid.n_steps < 1) throw std::invalid_argument("d_dt: need at least one time step");
    SpaceTimeField out(F.grid, F.tgrid);
    const double nu = static_cast<double>(F.tgrid.nu);
    for (size_t k = 0; k + 1 < F.rows.size(); ++k)
        for (int j = 0; j < F.grid.size(); ++j)
            out.rows[k].values[j] = nu * (F.rows[k + 1].values[j] - F.rows[k].values[j]);
    return out; // terminal row stays 0
}

SpaceTimeField d_dx(const SpaceTimeField& F) {
    SpaceTimeField out(F.grid, F.tgrid);
    for (size_t k = 0; k < F.rows.size(); ++k) out.rows[k] = d_dx(F.rows[k]);
    return out;
}

SpaceTimeField d2_dx(const SpaceTimeField& F) {
    SpaceTimeField out(F.grid, F.tgrid);
    for (size_t k = 0; k < F.rows.size(); ++k) out.rows[k] = d2_dx(F.rows[k]);
    return out;
}

SpaceTimeField shift_x(const SpaceTimeField& F, ShiftDir dir) {
    SpaceTimeField out(F.grid, F.tgrid);
    for (size_t k = 0; k < F.rows.size(); ++k) out.rows[k] = shift(F.rows[k], dir);
    return out;
}

SpaceTimeField shift_t(const SpaceTimeField& F, ShiftDir dir) {
    SpaceTimeField out(F.grid, F.tgrid);
    const size_t r = F.rows.size();
    for (size_t k = 0; k < r; ++k)
        out.rows[k] = dir == ShiftDir::left ? F.rows[(k + 1) % r]
                                            : F.rows[(k + r - 1) % r];
    return out;
}

cplx integrate_xt(const SpaceTimeField& F) {
    cplx sum(0.0);
    for (const GridFunction& row : F.rows)
        for (const cplx& v : row.values) sum += v;
    return sum * F.grid.cell_weight() / static_cast<double>(F.tgrid.nu);
}

SpaceTimeField operator*(const SpaceTimeField& a, const SpaceTimeField& b) {
    if (!(a.grid == b.grid) || !(a.tgrid == b.tgrid))
        throw std::invalid_argument("grid mismatch in space-time product");
    SpaceTimeField out = a;
    for (size_t k = 0; k < a.rows.size(); ++k) out.rows[k] = a.rows[k] * b.rows[k];
    return out;
}

} // namespace heatlab
