#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "heatlab/fourier.hpp"
#include "heatlab/grid.hpp"
#include "heatlab/martingale.hpp"

namespace heatlab {

using json = nlohmann::ordered_json;

// Shortest round-trip decimal form; identical configs must serialize to
// identical bytes.
std::string format_double(double v);

std::string grid_csv(const GridFunction& f);    // j,x_j,re,im
std::string coeffs_csv(const FourierCoeffs& c); // m,re,im,abs
std::string snapshot_csv(const std::vector<std::pair<double, GridFunction>>& rows); // t,j,x_j,re,im

struct MixCsvRow {
    long long n;
    double tv_gap;
    double eps_n;
    double delta_n; // NaN for even N (column left empty)
};
std::string mix_csv(const std::vector<MixCsvRow>& rows); // n,tv_gap,eps_n,delta_n

struct CoupleCsvRow {
    long long n;
    double exact_tail;
    double mc_tail;
};
std::string couple_csv(const std::vector<CoupleCsvRow>& rows); // n,exact_tail,mc_tail

std::string association_csv(const AssociationTable& table); // level,k,kind,state

// {eta, nu, rows: [{t_index, cells: [{k, value_num, value_den}]}]};
// numerators and denominators are decimal strings to keep them exact.
json martingale_dump_json(const ExtendedProcess& ext);

void write_text_file(const std::string& path, const std::string& content);

} // namespace heatlab
