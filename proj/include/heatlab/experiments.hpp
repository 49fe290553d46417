#pragma once

#include <string>
#include <vector>

#include "heatlab/rational.hpp"
#include "heatlab/report_io.hpp"

namespace heatlab {

enum class OutputFormat { csv, json, both };

struct RunResult {
    json report; // config echo, per-check results, residuals, runtime_ms, artifacts
    bool pass = false;
    std::vector<std::string> artifacts;
};

struct MixConfig {
    int n_states = 5;
    int n_max = 200;
    bool exact = true; // exact-rational gap and bound comparison up to N = 9
};

struct CoupleConfig {
    int n_states = 5;
    int n_max = 0; // 0: defaults to 20 blocks of length N-1
    long long trials = 100000;
    uint64_t seed = 0;
    int start_state = 0;
};

struct MartingaleConfig {
    int eta = 2;
    int nu = 1;
    std::vector<Rational> initial; // empty: delta at state 0
};

struct CalculusConfig {
    int eta = 16;
    int n_pairs = 100;
    uint64_t seed = 0;
    double tol = 1e-12;
};

struct FourierConfig {
    int eta = 64;
    std::string preset = "expcos";
    uint64_t seed = 0; // used when preset == "random"
    double tol = 1e-10;
};

struct HeatConfig {
    std::string preset = "cos";
    int eta = 64;
    int nu = 256;
    double t = 1.0;
    double tol = 5e-3;
    int snapshot_rows = 5;
};

struct EquilibriumConfig {
    std::string preset = "cos";
    int eta = 64;
    int nu = 256;
    double t = 20.0;
    double tol = 1e-8;
};

struct EquivalenceConfig {
    int eta = 16;
    long long n_steps = 50;
    uint64_t seed = 0;
    double tol = 1e-12;
};

RunResult run_mix(const MixConfig&, const std::string& out_dir, OutputFormat fmt);
RunResult run_couple(const CoupleConfig&, const std::string& out_dir, OutputFormat fmt);
RunResult run_martingale(const MartingaleConfig&, const std::string& out_dir, OutputFormat fmt);
RunResult run_calculus(const CalculusConfig&, const std::string& out_dir, OutputFormat fmt);
RunResult run_fourier(const FourierConfig&, const std::string& out_dir, OutputFormat fmt);
RunResult run_heat(const HeatConfig&, const std::string& out_dir, OutputFormat fmt);
RunResult run_equilibrium(const EquilibriumConfig&, const std::string& out_dir, OutputFormat fmt);
RunResult run_equivalence(const EquivalenceConfig&, const std::string& out_dir, OutputFormat fmt);

// Residuals of the derivative/shift identity suite on one random draw of
// (g, h) plus a small space-time field; used by the calculus runner and
// the acceptance suite.
struct CalculusResiduals {
    double product_rule;
    double parts_first;
    double parts_second;
    double shift_commute;
    double restricted_parts; // 0 for odd eta
    double space_time;
    double max() const;
};

CalculusResiduals calculus_residuals(int eta, uint64_t seed);

} // namespace heatlab
