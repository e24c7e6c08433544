// csv_io.hpp — lossless CSV emission for the simulation scenarios.
//
// Schema: header `t,re_amp,im_amp,occupation[,re_ref,im_ref]`, 17 significant
// digits, comma separator, LF line endings. The format round-trips binary64
// exactly.

#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "mirrorlab/types.hpp"

namespace mirrorlab {

/// Writes one component of a series; `reference` (when given) supplies the
/// extra re_ref/im_ref columns. `keep_below` drops rows with t >= that time
/// (used for half-open sweep windows).
void write_series_csv(const std::filesystem::path& path, const TimeSeries& series,
                      std::size_t comp = 0,
                      const std::function<complex(double)>& reference = nullptr,
                      std::optional<double> keep_below = std::nullopt);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::size_t column(const std::string& name) const;
};

/// Strict reader for the schema above (used by tests and downstream tools).
CsvTable read_csv(const std::filesystem::path& path);

/// printf-"%.17g" formatting used for every numeric cell.
std::string format_cell(double v);

}  // namespace mirrorlab
