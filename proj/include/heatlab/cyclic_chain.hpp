#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "heatlab/rational.hpp"

namespace heatlab {

// Random walk on Z/NZ: from state i move to i-1, i, i+1 (mod N), each with
// probability 1/3. For N = 2 the two off-diagonal moves coincide, so the
// kernel row is (1/3, 2/3). The kernel is circulant and symmetric; the
// uniform distribution is invariant.
struct CyclicChain {
    int n_states;

    explicit CyclicChain(int n) : n_states(n) {
        if (n < 2) throw std::invalid_argument("CyclicChain: need at least 2 states");
    }
};

// p(i, j): number of moves from i landing on j, times 1/3.
template <class T>
T kernel_entry(const CyclicChain& chain, int i, int j) {
    const int n = chain.n_states;
    int hits = 0;
    for (int d = -1; d <= 1; ++d)
        if (((i + d) % n + n) % n == j) ++hits;
    return T(hits) / T(3);
}

// One application of the kernel to a mass vector. Summing over the three
// moves handles the N = 2 coincidence without a special case.
template <class T>
std::vector<T> kernel_apply(int n, const std::vector<T>& w) {
    std::vector<T> out(n);
    for (int j = 0; j < n; ++j)
        out[j] = (w[(j + n - 1) % n] + w[j] + w[(j + 1) % n]) / T(3);
    return out;
}

template <class T>
struct Distribution {
    std::vector<T> weights;
    T mass; // sum of weights

    static Distribution from_weights(std::vector<T> w) {
        Distribution d;
        d.mass = T(0);
        for (const T& x : w) {
            if (x < T(0)) throw std::domain_error("Distribution: negative weight");
            d.mass += x;
        }
        d.weights = std::move(w);
        return d;
    }

    static Distribution uniform(int n) {
        Distribution d;
        d.weights.assign(n, T(1) / T(n));
        d.mass = T(1);
        return d;
    }

    static Distribution delta(int n, int at) {
        std::vector<T> w(n, T(0));
        w.at(at) = T(1);
        return from_weights(std::move(w));
    }
};

using DistributionD = Distribution<double>;
using DistributionQ = Distribution<Rational>;

template <class T>
Distribution<T> evolve(const CyclicChain& chain, const Distribution<T>& d, long long n) {
    if (static_cast<int>(d.weights.size()) != chain.n_states)
        throw std::invalid_argument("evolve: distribution length does not match state count");
    if (n < 0) throw std::invalid_argument("evolve: negative step count");
    Distribution<T> out = d;
    for (long long k = 0; k < n; ++k)
        out.weights = kernel_apply(chain.n_states, out.weights);
    out.mass = T(0);
    for (const T& x : out.weights) out.mass += x;
    return out;
}

// P^n. The kernel is circulant, so row r of P^n is row 0 rotated by r;
// row 0 is the n-step evolution of a point mass at state 0.
template <class T>
std::vector<std::vector<T>> n_step_matrix(const CyclicChain& chain, long long n) {
    if (n < 0) throw std::invalid_argument("n_step_matrix: negative step count");
    const int N = chain.n_states;
    std::vector<T> row0(N, T(0));
    row0[0] = T(1);
    for (long long k = 0; k < n; ++k) row0 = kernel_apply(N, row0);
    std::vector<std::vector<T>> mat(N, std::vector<T>(N));
    for (int r = 0; r < N; ++r)
        for (int j = 0; j < N; ++j)
            mat[r][j] = row0[((j - r) % N + N) % N];
    return mat;
}

namespace detail {
inline double abs_value(double x) { return std::abs(x); }
inline Rational abs_value(const Rational& x) { return rational_abs(x); }
} // namespace detail

// max_{i,j} |p^(n)_ij - 1/N|; by circulant symmetry the max over one row
// equals the max over the matrix.
template <class T>
T tv_gap(const CyclicChain& chain, long long n) {
    if (n < 1) throw std::invalid_argument("tv_gap: need n >= 1");
    const int N = chain.n_states;
    std::vector<T> row0(N, T(0));
    row0[0] = T(1);
    for (long long k = 0; k < n; ++k) row0 = kernel_apply(N, row0);
    const T pi = T(1) / T(N);
    T gap = T(0);
    for (const T& x : row0) {
        T dev = detail::abs_value(x - pi);
        if (dev > gap) gap = dev;
    }
    return gap;
}

enum class BoundVariant { general, odd };

// Geometric convergence bound (1 - rho)^(n/m - 1) with the cyclic chain's
// explicit block length and overlap probability:
//   general: m = N-1,     rho = 3^-(N-1)
//   odd:     m = (N-1)/2, rho = 3^-((N-1)/2)   (odd N only)
struct MixingBound {
    int n_states;
    int block_m;
    double rho;
    BoundVariant variant;

    static MixingBound general(int n);
    static MixingBound odd(int n);

    double value(long long n) const;
};

// Exact-rational check of tv <= (1 - rho)^(n/m - 1). Both sides are
// nonnegative, so raising to the m-th power clears the fractional
// exponent: tv^m <= (1 - rho)^(n - m) as rationals.
bool mixing_bound_holds_exact(const Rational& tv, int n_states, long long n, BoundVariant v);

// Smallest n with n >= m * (1 + log(eps) / log1p(-3^-m)), where m is the
// block length of the chosen variant. log1p keeps the denominator stable
// where 3^m can no longer be represented with the -1 intact.
long long steps_to_equilibrium(int eta, double eps, BoundVariant v);

// Exact tail P(T > n) of the coupling meeting time T = inf{n >= 1 : X_n = Y_n}
// for independent copies started from (delta_start, uniform). Product chain
// on N^2 states with the diagonal absorbing from step 1 on.
struct CouplingTail {
    int n_states;
    std::vector<Rational> tail; // tail[n] = P(T > n), tail[0] = 1
};

CouplingTail coupling_tail_exact(int n_states, int n_max, int start_state = 0);

// Monte Carlo estimate of the same tail; trial i draws from substream
// split_seed(seed, i), so results are independent of trial scheduling.
std::vector<double> simulate_meeting_time(int n_states, long long trials, int n_max,
                                          uint64_t seed, int start_state = 0);

} // namespace heatlab
