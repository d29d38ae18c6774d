#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "entbench/density_matrix.hpp"

namespace entb {

// Shortest decimal that round-trips to the same double; locale
// independent, '.' separator. All numeric file output goes through this.
std::string format_double(double v);

// ---- state records (JSONL) ----

struct StateRecord {
    std::int64_t id;
    DensityMatrix state;
};

// {"id":..,"dim_a":..,"dim_b":..,"entries":[[re,im],...]} on one line.
std::string state_record_line(std::int64_t id, const DensityMatrix& state);

// Parses one JSONL line and validates the density-matrix invariants.
// Throws Error with a descriptive message on malformed input.
StateRecord parse_state_record(const std::string& line);

void write_states_jsonl(std::ostream& out, const std::vector<StateRecord>& records);
std::vector<StateRecord> read_states_jsonl(std::istream& in, const std::string& path_for_errors);

// ---- CSV ----

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::optional<std::size_t> column(const std::string& name) const;
};

std::string csv_join(const std::vector<std::string>& fields);
void write_csv(std::ostream& out, const CsvTable& table);
CsvTable read_csv(std::istream& in, const std::string& path_for_errors);

// numeric cell helpers; empty cell <-> nullopt
std::string csv_cell(std::optional<double> v);
std::optional<double> parse_cell(const std::string& cell);

// ---- scatter SVG ----

struct SvgOptions {
    double width = 800;
    double height = 600;
    std::string title;    // defaults to "<y> vs <x>"
    std::string x_label;
    std::string y_label;
};

// Standalone SVG scatter plot: linear axes with tick labels, one circle
// per point, ranges auto-fit with 5% padding. Byte output depends only
// on the inputs.
std::string scatter_svg(const std::vector<double>& xs, const std::vector<double>& ys,
                        const SvgOptions& options);

}  // namespace entb
