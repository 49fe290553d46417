#include "heatlab/fourier.hpp"

#include <cmath>

namespace heatlab {

GridFunction exp_grid(int eta, int m) {
    if (m < -eta || m > eta - 1) throw std::out_of_range("exp_grid: mode out of range");
    GridFunction out{CircleGrid(eta)};
    for (int j = 0; j < out.size(); ++j)
        out.values[j] = std::polar(1.0, out.grid.point(j) * m);
    return out;
}

FourierCoeffs fourier_coeffs(const GridFunction& f) {
    const int eta = f.grid.eta;
    FourierCoeffs out(eta);
    const double norm = 1.0 / (2.0 * eta); // (1/2pi)(pi/eta)
    // Direct O(eta^2) sums; desk-scale grids make exactness of the
    // weighting worth more than a fast transform.
    for (int m = -eta; m <= eta - 1; ++m) {
        cplx acc(0.0);
        for (int j = 0; j < f.size(); ++j)
            acc += f.values[j] * std::polar(1.0, -f.grid.point(j) * m);
        out.at(m) = norm * acc;
    }
    return out;
}

GridFunction inverse(const FourierCoeffs& coeffs) {
    const int eta = coeffs.eta;
    GridFunction out{CircleGrid(eta)};
    for (int j = 0; j < out.size(); ++j) {
        cplx acc(0.0);
        for (int m = -eta; m <= eta - 1; ++m)
            acc += coeffs.at(m) * std::polar(1.0, out.grid.point(j) * m);
        out.values[j] = acc;
    }
    return out;
}

cplx phi_symbol(int eta, int m) {
    if (m < -eta || m > eta) throw std::out_of_range("phi_symbol: |m| <= eta required");
    const double s = eta / (2.0 * pi);
    return s * (std::polar(1.0, -m * pi / eta) - std::polar(1.0, m * pi / eta));
}

cplx psi_symbol(int eta, int m) {
    if (2 * std::abs(m) > eta) throw std::out_of_range("psi_symbol: |m| <= eta/2 required");
    const double s = eta / (2.0 * pi);
    return s * (cplx(1.0) - std::polar(1.0, 2.0 * pi * m / eta));
}

cplx u_symbol(int eta, int m) {
    if (2 * std::abs(m) > eta) throw std::out_of_range("u_symbol: |m| <= eta/2 required");
    return std::polar(1.0, -2.0 * pi * m / eta);
}

double theta_symbol(int eta, int m) {
    if (2 * std::abs(m) > eta) throw std::out_of_range("theta_symbol: |m| <= eta/2 required");
    const double s = (eta / pi) * std::sin(pi * m / eta);
    return -s * s;
}

SymbolValues symbols(int eta, int m) {
    if (eta < 2) throw std::invalid_argument("symbols: need eta >= 2");
    if (m < -eta || m > eta) throw std::out_of_range("symbols: |m| <= eta required");
    SymbolValues out{eta, m, phi_symbol(eta, m), {}, {}, {}};
    if (2 * std::abs(m) <= eta) {
        out.psi = psi_symbol(eta, m);
        out.u = u_symbol(eta, m);
        out.theta = cplx(theta_symbol(eta, m), 0.0);
    }
    return out;
}

DerivativeIdentityReport derivative_coeff_identity_check(const GridFunction& f) {
    const int eta = f.grid.eta;
    const FourierCoeffs base = fourier_coeffs(f);
    const FourierCoeffs first = fourier_coeffs(d_dx(f));
    const FourierCoeffs second = fourier_coeffs(d2_dx(f));
    DerivativeIdentityReport rep{0.0, 0.0};
    for (int m = -eta; m <= eta - 1; ++m) {
        const cplx phi = phi_symbol(eta, m);
        rep.first_order = std::max(rep.first_order, std::abs(first.at(m) + phi * base.at(m)));
        rep.second_order =
            std::max(rep.second_order, std::abs(second.at(m) - phi * phi * base.at(m)));
    }
    return rep;
}

RestrictedIdentityReport restricted_coeff_identity_check(const GridFunction& f) {
    if (f.grid.eta % 2 != 0)
        throw std::invalid_argument("restricted_coeff_identity_check: eta must be even");
    const int eta = f.grid.eta;
    const int half = eta / 2;
    const FourierCoeffs base = fourier_coeffs(restrict_even(f));
    const FourierCoeffs second = fourier_coeffs(restrict_even(d2_dx(f)));
    RestrictedIdentityReport rep{0.0};
    for (int m = -half; m <= half - 1; ++m) {
        const cplx lhs = second.at(m);
        const cplx rhs = psi_symbol(eta, m) * psi_symbol(eta, m) * u_symbol(eta, m) * base.at(m);
        rep.max_residual = std::max(rep.max_residual, std::abs(lhs - rhs));
    }
    return rep;
}

DecayReport decay_report(const GridFunction& f) {
    if (f.grid.eta % 2 != 0) throw std::invalid_argument("decay_report: eta must be even");
    const int half = f.grid.eta / 2;
    const FourierCoeffs base = fourier_coeffs(restrict_even(f));
    const FourierCoeffs second = fourier_coeffs(restrict_even(d2_dx(f)));
    DecayReport rep{0.0, {}};
    for (int m = -half; m <= half - 1; ++m)
        rep.f_const = std::max(rep.f_const, std::abs(second.at(m)));
    const double quarter_pi_sq = pi * pi / 4.0;
    for (int m = -half; m <= half - 1; ++m) {
        if (m == 0) continue;
        const double bound = quarter_pi_sq * rep.f_const / (static_cast<double>(m) * m);
        if (std::abs(base.at(m)) > bound) rep.violations.push_back(m);
    }
    return rep;
}

} // namespace heatlab
