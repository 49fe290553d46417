#include "heatlab/report_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace heatlab {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string grid_csv(const GridFunction& f) {
    std::string out = "j,x_j,re,im\n";
    for (int j = 0; j < f.size(); ++j) {
        out += std::to_string(j);
        out += ',';
        out += format_double(f.grid.point(j));
        out += ',';
        out += format_double(f.values[j].real());
        out += ',';
        out += format_double(f.values[j].imag());
        out += '\n';
    }
    return out;
}

std::string coeffs_csv(const FourierCoeffs& c) {
    std::string out = "m,re,im,abs\n";
    for (int m = -c.eta; m <= c.eta - 1; ++m) {
        const cplx v = c.at(m);
        out += std::to_string(m);
        out += ',';
        out += format_double(v.real());
        out += ',';
        out += format_double(v.imag());
        out += ',';
        out += format_double(std::abs(v));
        out += '\n';
    }
    return out;
}

std::string snapshot_csv(const std::vector<std::pair<double, GridFunction>>& rows) {
    std::string out = "t,j,x_j,re,im\n";
    for (const auto& [t, row] : rows) {
        for (int j = 0; j < row.size(); ++j) {
            out += format_double(t);
            out += ',';
            out += std::to_string(j);
            out += ',';
            out += format_double(row.grid.point(j));
            out += ',';
            out += format_double(row.values[j].real());
            out += ',';
            out += format_double(row.values[j].imag());
            out += '\n';
        }
    }
    return out;
}

std::string mix_csv(const std::vector<MixCsvRow>& rows) {
    std::string out = "n,tv_gap,eps_n,delta_n\n";
    for (const MixCsvRow& r : rows) {
        out += std::to_string(r.n);
        out += ',';
        out += format_double(r.tv_gap);
        out += ',';
        out += format_double(r.eps_n);
        out += ',';
        if (!std::isnan(r.delta_n)) out += format_double(r.delta_n);
        out += '\n';
    }
    return out;
}

std::string couple_csv(const std::vector<CoupleCsvRow>& rows) {
    std::string out = "n,exact_tail,mc_tail\n";
    for (const CoupleCsvRow& r : rows) {
        out += std::to_string(r.n);
        out += ',';
        out += format_double(r.exact_tail);
        out += ',';
        out += format_double(r.mc_tail);
        out += '\n';
    }
    return out;
}

std::string association_csv(const AssociationTable& table) {
    std::string out = "level,k,kind,state\n";
    for (int j = 0; j <= table.nu; ++j) {
        const auto& level = table.levels[j];
        for (size_t k = 0; k < level.state.size(); ++k) {
            out += std::to_string(j);
            out += ',';
            out += std::to_string(k);
            out += ',';
            out += (level.kind[k] == PointKind::first ? "first" : "second");
            out += ',';
            out += std::to_string(level.state[k]);
            out += '\n';
        }
    }
    return out;
}

json martingale_dump_json(const ExtendedProcess& ext) {
    json dump;
    dump["eta"] = ext.eta;
    dump["nu"] = ext.nu;
    dump["rows"] = json::array();
    for (int j = 0; j <= ext.nu; ++j) {
        json row;
        row["t_index"] = j;
        row["cells"] = json::array();
        const auto& values = ext.rows[j];
        for (size_t k = 0; k < values.size(); ++k) {
            json cell;
            cell["k"] = k;
            cell["value_num"] = numerator(values[k]).str();
            cell["value_den"] = denominator(values[k]).str();
            row["cells"].push_back(std::move(cell));
        }
        dump["rows"].push_back(std::move(row));
    }
    return dump;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
}

} // namespace heatlab
