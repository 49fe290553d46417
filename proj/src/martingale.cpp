#include "heatlab/martingale.hpp"

#include <map>

#include "heatlab/cyclic_chain.hpp"
#include "heatlab/errors.hpp"

namespace heatlab {

ProcessGrid build_process(const std::vector<Rational>& initial, int eta, int nu) {
    if (eta < 2) throw std::invalid_argument("build_process: need eta >= 2");
    if (nu < 1) throw std::invalid_argument("build_process: need nu >= 1");
    if (static_cast<int>(initial.size()) != eta)
        throw std::invalid_argument("build_process: initial vector length must equal eta");
    for (const Rational& v : initial)
        if (v < 0) throw std::domain_error("build_process: negative initial entry");

    ProcessGrid out{eta, nu, {}};
    out.by_time.reserve(nu + 1);
    out.by_time.push_back(initial);
    for (int j = 1; j <= nu; ++j)
        out.by_time.push_back(kernel_apply(eta, out.by_time.back()));
    return out;
}

long long ReverseFiltration::cells_at(int time_level) const {
    if (time_level < 0 || time_level > nu)
        throw std::invalid_argument("ReverseFiltration: level out of range");
    long long n = eta;
    for (int r = 0; r < nu - time_level; ++r) n *= 3;
    return n;
}

Rational ReverseFiltration::cell_measure(int time_level) const {
    return Rational(1, BigInt(cells_at(time_level)));
}

AssociationTable build_association(int eta, int nu, long long max_cells) {
    if (eta < 2) throw std::invalid_argument("build_association: need eta >= 2");
    if (nu < 1) throw std::invalid_argument("build_association: need nu >= 1");
    long long finest = eta;
    for (int r = 0; r < nu; ++r) {
        finest *= 3;
        if (finest > max_cells)
            throw resource_error("build_association: 3^nu * eta exceeds the cell budget");
    }

    AssociationTable table{eta, nu, std::vector<AssociationTable::Level>(nu + 1)};

    // base level: identity association, all first kind
    auto& base = table.levels[nu];
    base.kind.assign(eta, PointKind::first);
    base.state.resize(eta);
    for (int i = 0; i < eta; ++i) base.state[i] = i;

    for (int j = nu - 1; j >= 0; --j) {
        const auto& parent = table.levels[j + 1];
        auto& level = table.levels[j];
        const size_t n = parent.state.size();
        level.kind.resize(3 * n);
        level.state.resize(3 * n);
        for (size_t q = 0; q < n; ++q) {
            const int32_t s = parent.state[q];
            level.kind[3 * q] = PointKind::first;
            level.state[3 * q] = s;
            level.kind[3 * q + 1] = PointKind::second;
            level.state[3 * q + 1] = static_cast<int32_t>((s - 1 + eta) % eta);
            level.kind[3 * q + 2] = PointKind::second;
            level.state[3 * q + 2] = static_cast<int32_t>((s + 1) % eta);
        }
    }
    return table;
}

ExtendedProcess extend_process(const ProcessGrid& process, const AssociationTable& assoc) {
    if (process.eta != assoc.eta || process.nu != assoc.nu)
        throw std::invalid_argument("extend_process: mismatched (eta, nu)");
    ExtendedProcess out{process.eta, process.nu, {}};
    out.rows.resize(process.nu + 1);
    for (int j = 0; j <= process.nu; ++j) {
        const auto& level = assoc.levels[j];
        auto& row = out.rows[j];
        row.reserve(level.state.size());
        for (const int32_t s : level.state) row.push_back(process.value(s, j));
    }
    return out;
}

std::vector<Rational> conditional_expectation(const ExtendedProcess& ext, int from_time,
                                              int to_time) {
    if (from_time < 0 || to_time > ext.nu || from_time > to_time)
        throw std::invalid_argument("conditional_expectation: need 0 <= from <= to <= nu");
    const auto& fine = ext.rows.at(from_time);
    long long block = 1;
    for (int r = 0; r < to_time - from_time; ++r) block *= 3;
    std::vector<Rational> out(fine.size() / block);
    for (size_t q = 0; q < out.size(); ++q) {
        Rational acc(0);
        for (long long c = 0; c < block; ++c) acc += fine[q * block + c];
        out[q] = acc / Rational(BigInt(block));
    }
    return out;
}

MartingaleReport verify_reverse_martingale(const ExtendedProcess& ext) {
    MartingaleReport rep{true, {}};
    auto check_pair = [&](int j, int i) {
        const std::vector<Rational> averaged = conditional_expectation(ext, j, i);
        const auto& expected = ext.rows.at(i);
        for (size_t k = 0; k < expected.size(); ++k) {
            if (averaged[k] != expected[k]) {
                rep.pass = false;
                rep.violations.push_back({j, i, static_cast<long long>(k)});
            }
        }
    };
    // adjacent pairs (the tower law makes these sufficient) ...
    for (int i = 0; i < ext.nu; ++i) check_pair(i, i + 1);
    // ... and, independently, every pair
    for (int j = 0; j <= ext.nu; ++j)
        for (int i = j; i <= ext.nu; ++i) check_pair(j, i);
    return rep;
}

DistributionEqualityReport verify_distribution_equality(const ProcessGrid& process,
                                                        const ExtendedProcess& ext, int t_index) {
    if (t_index < 0 || t_index > process.nu)
        throw std::invalid_argument("verify_distribution_equality: time index out of range");
    long long scale = 1;
    for (int r = 0; r < process.nu - t_index; ++r) scale *= 3;

    std::map<Rational, long long> coarse;
    for (int i = 0; i < process.eta; ++i) ++coarse[process.value(i, t_index)];
    std::map<Rational, long long> fine;
    for (const Rational& v : ext.row_at_time(t_index)) ++fine[v];

    DistributionEqualityReport rep{true, {}};
    for (const auto& [value, count] : coarse) {
        const auto it = fine.find(value);
        const long long fine_count = it == fine.end() ? 0 : it->second;
        if (fine_count != scale * count) {
            rep.pass = false;
            rep.mismatches.emplace_back(value, count, fine_count);
        }
    }
    for (const auto& [value, count] : fine) {
        if (coarse.find(value) == coarse.end()) {
            rep.pass = false;
            rep.mismatches.emplace_back(value, 0, count);
        }
    }
    return rep;
}

Rational cdf(const std::vector<Rational>& row, const Rational& x) {
    if (row.empty()) throw std::invalid_argument("cdf: empty row");
    long long count = 0;
    for (const Rational& v : row)
        if (v <= x) ++count;
    return Rational(BigInt(count), BigInt(static_cast<long long>(row.size())));
}

Rational equilibrium_deviation(const ProcessGrid& process) {
    Rational mass(0);
    for (const Rational& v : process.by_time.front()) mass += v;
    const Rational target = mass / Rational(process.eta);
    Rational dev(0);
    for (const Rational& v : process.by_time.back()) {
        Rational d = rational_abs(v - target);
        if (d > dev) dev = d;
    }
    return dev;
}

} // namespace heatlab
