#include "mirrorlab/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace mirrorlab {

std::string format_cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_series_csv(const std::filesystem::path& path, const TimeSeries& series,
                      std::size_t comp, const std::function<complex(double)>& reference,
                      std::optional<double> keep_below) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("csv: cannot open " + path.string());

    out << "t,re_amp,im_amp,occupation";
    if (reference) out << ",re_ref,im_ref";
    out << "\n";

    const auto& v = series.component(comp);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double t = series.time_at(i);
        if (keep_below && t >= *keep_below - 1e-9 * series.dt) break;
        out << format_cell(t) << ',' << format_cell(v[i].real()) << ','
            << format_cell(v[i].imag()) << ',' << format_cell(std::norm(v[i]));
        if (reference) {
            const complex r = reference(t);
            out << ',' << format_cell(r.real()) << ',' << format_cell(r.imag());
        }
        out << "\n";
    }
    if (!out) throw std::runtime_error("csv: write failed for " + path.string());
}

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw std::out_of_range("csv: no column named " + name);
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("csv: cannot open " + path.string());

    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("csv: empty file");
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) table.header.push_back(cell);

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ls(line);
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() != table.header.size())
            throw std::runtime_error("csv: ragged row in " + path.string());
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace mirrorlab
