#pragma once

#include <optional>
#include <vector>

#include "heatlab/grid.hpp"

namespace heatlab {

// Discrete Fourier coefficients on the 2*eta grid, modes m in
// Z_eta = {-eta, ..., eta-1}. coeff(m) = (1/2eta) sum_j f(x_j) e^{-i x_j m};
// with exactly 2*eta modes the inversion f(x_j) = sum_m coeff(m) e^{i x_j m}
// is an identity up to rounding.
struct FourierCoeffs {
    int eta;
    std::vector<cplx> c; // index m + eta

    explicit FourierCoeffs(int eta_) : eta(eta_), c(2 * static_cast<size_t>(eta_), cplx(0.0)) {
        if (eta_ < 1) throw std::invalid_argument("FourierCoeffs: need eta >= 1");
    }

    bool in_range(int m) const { return m >= -eta && m <= eta - 1; }

    cplx& at(int m) {
        if (!in_range(m)) throw std::out_of_range("FourierCoeffs: mode out of range");
        return c[static_cast<size_t>(m + eta)];
    }
    const cplx& at(int m) const {
        if (!in_range(m)) throw std::out_of_range("FourierCoeffs: mode out of range");
        return c[static_cast<size_t>(m + eta)];
    }
};

// Grid sampling of x -> e^{i x m}, m in Z_eta.
GridFunction exp_grid(int eta, int m);

FourierCoeffs fourier_coeffs(const GridFunction& f);
GridFunction inverse(const FourierCoeffs& coeffs);

// Fourier multipliers of the discrete operators:
//   phi(m)   = (eta/2pi)(e^{-i m pi/eta} - e^{i m pi/eta}) = -(i eta/pi) sin(pi m/eta)
//   psi(m)   = (eta/2pi)(1 - e^{2pi i m/eta})          (restricted derivative)
//   u(m)     = e^{-2pi i m/eta}                        (restricted double shift)
//   theta(m) = psi(m)^2 u(m) = -(eta/pi)^2 sin^2(pi m/eta), real and <= 0
// phi lives on Z_eta; psi, u, theta on the half-grid modes |m| <= eta/2.
struct SymbolValues {
    int eta;
    int m;
    cplx phi;
    std::optional<cplx> psi;
    std::optional<cplx> u;
    std::optional<cplx> theta;
};

SymbolValues symbols(int eta, int m);

cplx phi_symbol(int eta, int m);
cplx psi_symbol(int eta, int m);
cplx u_symbol(int eta, int m);
// exact closed form, real
double theta_symbol(int eta, int m);

// Checks hat(f')(m) = -phi(m) hat(f)(m) and hat(f'')(m) = phi(m)^2 hat(f)(m)
// over all modes; reports the largest residual of each order.
struct DerivativeIdentityReport {
    double first_order;
    double second_order;
    double max_residual() const { return first_order > second_order ? first_order : second_order; }
};

DerivativeIdentityReport derivative_coeff_identity_check(const GridFunction& f);

// Checks hat(restrict(f''))(m) = psi(m)^2 u(m) hat(restrict(f))(m) on the
// half-grid modes. Requires even eta.
struct RestrictedIdentityReport {
    double max_residual;
};

RestrictedIdentityReport restricted_coeff_identity_check(const GridFunction& f);

// Coefficient decay of the restricted function: measures
// F = max_m |hat(restrict(f''))(m)| and checks
// |hat(restrict(f))(m)| <= (pi^2/4) F / m^2 for every m != 0.
// The constant comes from |psi(m)| >= 2|m|/pi on |m| <= eta/2.
struct DecayReport {
    double f_const;
    std::vector<int> violations;
    bool pass() const { return violations.empty(); }
};

DecayReport decay_report(const GridFunction& f);

} // namespace heatlab
