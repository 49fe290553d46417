#include "heatlab/cyclic_chain.hpp"

#include <algorithm>
#include <cstdlib>

#include "heatlab/errors.hpp"
#include "heatlab/rng.hpp"

namespace heatlab {

MixingBound MixingBound::general(int n) {
    if (n < 2) throw std::invalid_argument("MixingBound: need at least 2 states");
    return MixingBound{n, n - 1, std::pow(3.0, -(n - 1)), BoundVariant::general};
}

MixingBound MixingBound::odd(int n) {
    if (n < 2) throw std::invalid_argument("MixingBound: need at least 2 states");
    if (n % 2 == 0)
        throw std::invalid_argument("MixingBound: odd variant requires an odd state count");
    const int m = (n - 1) / 2;
    return MixingBound{n, m, std::pow(3.0, -m), BoundVariant::odd};
}

double MixingBound::value(long long n) const {
    if (n < 1) throw std::invalid_argument("MixingBound::value: need n >= 1");
    const double exponent = static_cast<double>(n) / block_m - 1.0;
    // (1 - rho)^exponent through log1p for accuracy at tiny rho
    return std::exp(exponent * std::log1p(-rho));
}

bool mixing_bound_holds_exact(const Rational& tv, int n_states, long long n, BoundVariant v) {
    if (n < 1) throw std::invalid_argument("mixing_bound_holds_exact: need n >= 1");
    int m = n_states - 1;
    if (v == BoundVariant::odd) {
        if (n_states % 2 == 0)
            throw std::invalid_argument("mixing_bound_holds_exact: odd variant requires odd N");
        m = (n_states - 1) / 2;
    }
    const BigInt p3 = ipow(BigInt(3), m);
    const Rational base(p3 - 1, p3); // 1 - rho
    return rational_pow(tv, m) <= rational_pow(base, n - m);
}

long long steps_to_equilibrium(int eta, double eps, BoundVariant v) {
    if (eta < 2) throw std::invalid_argument("steps_to_equilibrium: need eta >= 2");
    if (!(eps > 0.0)) throw std::domain_error("steps_to_equilibrium: eps must be positive");
    if (eps >= 1.0) throw std::domain_error("steps_to_equilibrium: eps must be below 1");
    int m = eta - 1;
    if (v == BoundVariant::odd) {
        if (eta % 2 == 0)
            throw std::invalid_argument("steps_to_equilibrium: odd variant requires odd eta");
        m = (eta - 1) / 2;
    }
    const double denom = std::log1p(-std::pow(3.0, -m));
    if (denom == 0.0)
        throw std::overflow_error("steps_to_equilibrium: eta too large for double evaluation");
    const double x = m * (1.0 + std::log(eps) / denom);
    if (!(x < 9.0e18))
        throw std::overflow_error("steps_to_equilibrium: step count exceeds 64-bit range");
    // The bound is analytically integral at round values of eps; floating
    // noise must not bump those cases by a whole step.
    const double r = std::round(x);
    if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x)))
        return static_cast<long long>(r);
    return static_cast<long long>(std::ceil(x));
}

CouplingTail coupling_tail_exact(int n_states, int n_max, int start_state) {
    if (n_states < 2) throw std::invalid_argument("coupling_tail_exact: need N >= 2");
    if (n_max < 1) throw std::invalid_argument("coupling_tail_exact: need n_max >= 1");
    if (n_states > 40)
        throw resource_error("coupling_tail_exact: N^2 product chain limited to N <= 40");
    if (start_state < 0 || start_state >= n_states)
        throw std::invalid_argument("coupling_tail_exact: start state out of range");

    const int N = n_states;
    const Rational ninth = Rational(1, 9);
    // alive[x*N + y] = P(W_n = (x, y), T > n)
    std::vector<Rational> alive(N * N, Rational(0));
    for (int y = 0; y < N; ++y) alive[start_state * N + y] = Rational(1, N);

    CouplingTail out{N, {}};
    out.tail.reserve(n_max + 1);
    out.tail.push_back(Rational(1)); // T >= 1 by definition

    std::vector<Rational> next(N * N);
    for (int n = 1; n <= n_max; ++n) {
        std::fill(next.begin(), next.end(), Rational(0));
        for (int x = 0; x < N; ++x) {
            for (int y = 0; y < N; ++y) {
                const Rational& mass = alive[x * N + y];
                if (mass == 0) continue;
                const Rational share = mass * ninth;
                for (int dx = -1; dx <= 1; ++dx) {
                    const int xn = ((x + dx) % N + N) % N;
                    for (int dy = -1; dy <= 1; ++dy) {
                        const int yn = ((y + dy) % N + N) % N;
                        next[xn * N + yn] += share;
                    }
                }
            }
        }
        Rational surviving(0);
        for (int x = 0; x < N; ++x) {
            next[x * N + x] = 0; // met at this step: absorbed
            for (int y = 0; y < N; ++y) surviving += next[x * N + y];
        }
        alive.swap(next);
        out.tail.push_back(surviving);
    }
    return out;
}

std::vector<double> simulate_meeting_time(int n_states, long long trials, int n_max,
                                          uint64_t seed, int start_state) {
    if (n_states < 2) throw std::invalid_argument("simulate_meeting_time: need N >= 2");
    if (trials < 1) throw std::invalid_argument("simulate_meeting_time: need trials >= 1");
    if (n_max < 0) throw std::invalid_argument("simulate_meeting_time: need n_max >= 0");

    const int N = n_states;
    // histogram over min(T, n_max + 1)
    std::vector<long long> met_at(n_max + 2, 0);
    for (long long trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(split_seed(seed, static_cast<uint64_t>(trial)));
        int x = start_state;
        int y = static_cast<int>(rng.next_below(static_cast<uint32_t>(N)));
        int met = n_max + 1;
        for (int n = 1; n <= n_max; ++n) {
            x = (x + N + static_cast<int>(rng.next_below(3)) - 1) % N;
            y = (y + N + static_cast<int>(rng.next_below(3)) - 1) % N;
            if (x == y) {
                met = n;
                break;
            }
        }
        ++met_at[met];
    }

    std::vector<double> tail(n_max + 1);
    long long beyond = 0; // trials with T > n
    for (int n = n_max; n >= 0; --n) {
        beyond += met_at[n + 1];
        tail[n] = static_cast<double>(beyond) / static_cast<double>(trials);
    }
    return tail;
}

} // namespace heatlab
