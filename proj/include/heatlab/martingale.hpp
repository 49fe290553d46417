#pragma once

#include <cstdint>
#include <vector>

#include "heatlab/rational.hpp"

namespace heatlab {

// Exact chain-driven process on the unit-interval grid: state i sits on
// [i/eta, (i+1)/eta) and F(i/eta, j/nu) = (pi_f K^j)(i) for the eta-state
// cyclic kernel K. Column mass is constant in j.
struct ProcessGrid {
    int eta;
    int nu;
    // by_time[j][i], j = 0..nu, i = 0..eta-1
    std::vector<std::vector<Rational>> by_time;

    const Rational& value(int state, int t_index) const {
        return by_time.at(t_index).at(state);
    }
};

ProcessGrid build_process(const std::vector<Rational>& initial, int eta, int nu);

// Decreasing family of interval algebras on [0, 1): level i is generated by
// the 3^(nu-i)*eta intervals of width 1/(3^(nu-i)*eta); each level-i cell
// splits into exactly 3 cells of level i-1. Total mass is 1.
struct ReverseFiltration {
    int eta;
    int nu;

    long long cells_at(int time_level) const;
    Rational cell_measure(int time_level) const; // 1 / cells_at
};

enum class PointKind : uint8_t { first = 1, second = 2 };

// The ternary scaffolding: at time level j the special points are all
// k/(3^(nu-j)*eta), each carrying the chain state whose value the extended
// process copies. Children of a point with state s get states
// (s, s-1, s+1) mod eta at offsets (0, 1, 2) of the tripled index.
struct AssociationTable {
    struct Level {
        std::vector<PointKind> kind;
        std::vector<int32_t> state;
    };

    int eta;
    int nu;
    std::vector<Level> levels; // index = time level j, levels[j] has 3^(nu-j)*eta entries
};

AssociationTable build_association(int eta, int nu, long long max_cells = 1 << 20);

// F-bar rows: rows[j][k] is the value on cell k of the level-j algebra at
// time j/nu, i.e. F at the chain state associated with that cell.
struct ExtendedProcess {
    int eta;
    int nu;
    std::vector<std::vector<Rational>> rows;

    const std::vector<Rational>& row_at_time(int t_index) const { return rows.at(t_index); }
};

ExtendedProcess extend_process(const ProcessGrid& process, const AssociationTable& assoc);

// Averages the time-from row onto the coarser level-to algebra (blocks of
// 3^(to-from) cells), exactly.
std::vector<Rational> conditional_expectation(const ExtendedProcess& ext, int from_time,
                                              int to_time);

struct MartingaleViolation {
    int from_time;
    int to_time;
    long long cell;
};

struct MartingaleReport {
    bool pass;
    std::vector<MartingaleViolation> violations;
};

// One-step identity at every adjacent level pair, plus the multi-step
// identity for every pair j <= i, all as exact rational equalities.
MartingaleReport verify_reverse_martingale(const ExtendedProcess& ext);

struct DistributionEqualityReport {
    bool pass;
    // values whose scaled cardinalities disagree, as (value, coarse count, fine count)
    std::vector<std::tuple<Rational, long long, long long>> mismatches;
};

// For every value alpha in row t: 3^(nu-t) * #{states with F = alpha}
// must equal #{cells with F-bar = alpha}; equivalently the two laws under
// the normalized measures coincide.
DistributionEqualityReport verify_distribution_equality(const ProcessGrid& process,
                                                        const ExtendedProcess& ext, int t_index);

// Exact measure of {row value <= x} under the uniform law on cells.
Rational cdf(const std::vector<Rational>& row, const Rational& x);

// Largest |F(i, nu) - mass/eta|: how far the final column sits from the
// flat profile it approaches for large nu.
Rational equilibrium_deviation(const ProcessGrid& process);

} // namespace heatlab
