#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "heatlab/fourier.hpp"
#include "heatlab/rng.hpp"

using namespace heatlab;

namespace {

GridFunction random_grid_function(int eta, uint64_t seed) {
    SplitMix64 rng(seed);
    GridFunction f{CircleGrid(eta)};
    for (cplx& v : f.values) v = cplx(rng.next_symmetric(), rng.next_symmetric());
    return f;
}

GridFunction conjugate(const GridFunction& f) {
    GridFunction out = f;
    for (cplx& v : out.values) v = std::conj(v);
    return out;
}

} // namespace

TEST_CASE("exp_grid") {
    const auto one = exp_grid(6, 0);
    for (const cplx& v : one.values) CHECK(std::abs(v - cplx(1.0)) == 0.0);

    // x_3 = -pi/4 on the eta = 4 grid: e^{2 i x_3} = -i
    const auto f = exp_grid(4, 2);
    CHECK(std::abs(f.values[3] - cplx(0.0, -1.0)) < 1e-15);

    CHECK_THROWS_AS(exp_grid(4, 4), std::out_of_range);
    CHECK_THROWS_AS(exp_grid(4, -5), std::out_of_range);
}

TEST_CASE("mode orthogonality") {
    const int eta = 8;
    for (const int m : {-8, -3, 0, 5}) {
        for (const int mp : {-8, -3, 0, 5, 7}) {
            const cplx ip =
                integrate(exp_grid(eta, m) * conjugate(exp_grid(eta, mp))) / (2.0 * pi);
            const double expected = m == mp ? 1.0 : 0.0;
            CHECK(std::abs(ip - expected) <= 1e-12);
        }
    }
}

TEST_CASE("fourier coefficients") {
    GridFunction ones{CircleGrid(8)};
    for (cplx& v : ones.values) v = 1.0;
    const auto c1 = fourier_coeffs(ones);
    CHECK(std::abs(c1.at(0) - cplx(1.0)) < 1e-14);
    for (int m = -8; m <= 7; ++m)
        if (m != 0) CHECK(std::abs(c1.at(m)) < 1e-14);

    // cos splits into modes +-1 with weight 1/2, at any eta
    for (const int eta : {2, 8, 64}) {
        const auto cc = fourier_coeffs(sample_real([](double x) { return std::cos(x); }, eta));
        CHECK(std::abs(cc.at(1) - cplx(0.5)) < 1e-13);
        CHECK(std::abs(cc.at(-1) - cplx(0.5)) < 1e-13);
        for (int m = -eta; m <= eta - 1; ++m)
            if (m != 1 && m != -1) CHECK(std::abs(cc.at(m)) < 1e-12);
    }

    const auto ce = fourier_coeffs(exp_grid(16, 3));
    for (int m = -16; m <= 15; ++m)
        CHECK(std::abs(ce.at(m) - (m == 3 ? cplx(1.0) : cplx(0.0))) <= 1e-12);
}

TEST_CASE("inversion round-trip") {
    for (const int eta : {4, 16, 64}) {
        const auto f = random_grid_function(eta, split_seed(5, eta));
        const auto back = inverse(fourier_coeffs(f));
        CHECK(sup_distance(back, f) <= 1e-10);
    }

    FourierCoeffs delta0(8);
    delta0.at(0) = 1.0;
    const auto constant = inverse(delta0);
    for (const cplx& v : constant.values) CHECK(std::abs(v - cplx(1.0)) < 1e-13);

    FourierCoeffs half(8);
    half.at(1) = 0.5;
    half.at(-1) = 0.5;
    CHECK(sup_distance(inverse(half), sample_real([](double x) { return std::cos(x); }, 8)) <
          1e-13);
}

TEST_CASE("parseval") {
    for (const int eta : {4, 32}) {
        const auto f = random_grid_function(eta, split_seed(6, eta));
        double grid_energy = 0.0;
        for (const cplx& v : f.values) grid_energy += std::norm(v);
        grid_energy /= 2.0 * eta; // (1/2pi) integral of |f|^2
        double coeff_energy = 0.0;
        const auto c = fourier_coeffs(f);
        for (int m = -eta; m <= eta - 1; ++m) coeff_energy += std::norm(c.at(m));
        CHECK(grid_energy == doctest::Approx(coeff_energy).epsilon(1e-10));
    }
}

TEST_CASE("symbol values") {
    const auto s0 = symbols(8, 0);
    CHECK(std::abs(s0.phi) == 0.0);
    CHECK(std::abs(*s0.psi) == 0.0);
    CHECK(std::abs(*s0.theta) == 0.0);
    CHECK(std::abs(*s0.u - cplx(1.0)) == 0.0);

    // -(i 8/pi) sin(pi/4)
    const auto s = symbols(8, 2);
    CHECK(s.phi.real() == doctest::Approx(0.0));
    CHECK(s.phi.imag() == doctest::Approx(-1.80063).epsilon(1e-5));

    const auto s64 = symbols(64, 1);
    CHECK(s64.theta->real() == doctest::Approx(-0.999196).epsilon(1e-5));
    CHECK(std::abs(*s64.theta + cplx(1.0)) < 8.04e-4);

    // half-grid symbols drop out past eta/2; phi alone survives to eta
    const auto far = symbols(8, 6);
    CHECK(!far.psi.has_value());
    CHECK(std::abs(far.phi) > 0.0);
    CHECK_THROWS_AS(symbols(8, 9), std::out_of_range);
    CHECK_THROWS_AS(psi_symbol(8, 5), std::out_of_range);
}

TEST_CASE("symbol identities and ranges") {
    for (const int eta : {8, 16, 64}) {
        for (int m = -eta / 2; m <= eta / 2; ++m) {
            const cplx psi = psi_symbol(eta, m);
            const cplx u = u_symbol(eta, m);
            const double theta = theta_symbol(eta, m);
            // theta = psi^2 u, real and nonpositive
            CHECK(std::abs(psi * psi * u - cplx(theta, 0.0)) <= 1e-12 * (1.0 + std::abs(theta)));
            CHECK(theta <= 0.0);
            CHECK(std::abs(u) == doctest::Approx(1.0).epsilon(1e-15));
            if (m != 0) {
                const double am = std::abs(m);
                CHECK(std::abs(psi) >= 2.0 * am / pi - 1e-13);
                CHECK(std::abs(psi) <= am + 1e-13);
            }
            // theta -> -m^2 with the series bound
            CHECK(std::abs(theta + static_cast<double>(m) * m) <=
                  pi * pi * std::pow(static_cast<double>(m), 4) / (3.0 * eta * eta) + 1e-13);
        }
    }
    // monotone approach of theta(eta, 1) to -1
    double prev = theta_symbol(8, 1);
    for (const int eta : {16, 32, 64, 128, 256}) {
        const double cur = theta_symbol(eta, 1);
        CHECK(cur < prev);
        CHECK(cur > -1.0);
        prev = cur;
    }
}

TEST_CASE("derivative acts on modes by -phi(m)") {
    for (const int eta : {4, 8, 32}) {
        for (const int m : {-eta, -eta / 2, -1, 0, 1, eta / 2, eta - 1}) {
            const auto f = exp_grid(eta, m);
            const auto df = d_dx(f);
            const cplx factor = -phi_symbol(eta, m);
            double worst = 0.0;
            for (int j = 0; j < f.size(); ++j)
                worst = std::max(worst, std::abs(df.values[j] - factor * f.values[j]));
            CHECK(worst <= 1e-12 * eta);
        }
    }
}

TEST_CASE("derivative coefficient identities") {
    // eigenfunction case
    const auto rep_eig = derivative_coeff_identity_check(exp_grid(16, 5));
    CHECK(rep_eig.max_residual() <= 1e-12 * 16);

    // random data
    const auto rep_rand = derivative_coeff_identity_check(random_grid_function(32, 77));
    CHECK(rep_rand.max_residual() <= 1e-10);

    // constants: both sides vanish
    GridFunction c{CircleGrid(8)};
    for (cplx& v : c.values) v = 4.2;
    CHECK(derivative_coeff_identity_check(c).max_residual() <= 1e-13);
}

TEST_CASE("restricted coefficient identity") {
    const auto rep_eig = restricted_coeff_identity_check(exp_grid(16, 4));
    CHECK(rep_eig.max_residual <= 1e-12 * 16);

    const auto rep_rand = restricted_coeff_identity_check(random_grid_function(32, 78));
    CHECK(rep_rand.max_residual <= 1e-10);

    GridFunction c{CircleGrid(8)};
    for (cplx& v : c.values) v = cplx(0.0, -2.0);
    CHECK(restricted_coeff_identity_check(c).max_residual <= 1e-13);

    CHECK_THROWS_AS(restricted_coeff_identity_check(random_grid_function(5, 79)),
                    std::invalid_argument);
}

TEST_CASE("coefficient decay") {
    // finite spectrum: no violations possible
    const auto rep_cos = decay_report(sample_real([](double x) { return std::cos(x); }, 16));
    CHECK(rep_cos.pass());

    const auto rep_exp =
        decay_report(sample_real([](double x) { return std::exp(std::cos(x)); }, 64));
    CHECK(rep_exp.pass());
    CHECK(rep_exp.f_const > 0.0);

    // independent check of the reported inequality by direct summation
    {
        const int eta = 64, half = 32;
        const auto f = sample_real([](double x) { return std::exp(std::cos(x)); }, eta);
        const auto rf = restrict_even(f);
        const auto rd2 = restrict_even(d2_dx(f));
        auto coeff_of = [&](const GridFunction& g, int m) {
            cplx acc(0.0);
            for (int j = 0; j < g.size(); ++j)
                acc += g.values[j] * std::polar(1.0, -g.grid.point(j) * m);
            return acc / (2.0 * static_cast<double>(g.grid.eta));
        };
        double f_const = 0.0;
        for (int m = -half; m < half; ++m) f_const = std::max(f_const, std::abs(coeff_of(rd2, m)));
        CHECK(f_const == doctest::Approx(rep_exp.f_const).epsilon(1e-12));
        for (int m = -half; m < half; ++m) {
            if (m == 0) continue;
            CHECK(std::abs(coeff_of(rf, m)) <=
                  pi * pi / 4.0 * f_const / (static_cast<double>(m) * m));
        }
    }

    // single mode eta/4: |coeff| = 1 against (pi^2/4) |theta(eta/4)| / (eta/4)^2 = 2
    const auto rep_mode = decay_report(exp_grid(16, 4));
    CHECK(rep_mode.pass());
    CHECK(rep_mode.f_const == doctest::Approx(std::abs(theta_symbol(16, 4))).epsilon(1e-10));
}
