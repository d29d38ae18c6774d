#include "entbench/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace entb {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// ---- state records ----

std::string state_record_line(std::int64_t id, const DensityMatrix& state) {
    std::string line = "{\"id\":" + std::to_string(id);
    line += ",\"dim_a\":" + std::to_string(state.dim_a());
    line += ",\"dim_b\":" + std::to_string(state.dim_b());
    line += ",\"entries\":[";
    const auto& data = state.mat().data();
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (i) line += ',';
        line += '[';
        line += format_double(data[i].real());
        line += ',';
        line += format_double(data[i].imag());
        line += ']';
    }
    line += "]}";
    return line;
}

StateRecord parse_state_record(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("bad state record: ") + e.what());
    }
    if (!j.is_object() || !j.contains("id") || !j.contains("dim_a") || !j.contains("dim_b") ||
        !j.contains("entries"))
        throw Error("bad state record: missing id/dim_a/dim_b/entries");

    const std::int64_t id = j.at("id").get<std::int64_t>();
    const std::size_t dim_a = j.at("dim_a").get<std::size_t>();
    const std::size_t dim_b = j.at("dim_b").get<std::size_t>();
    const auto& entries = j.at("entries");
    const std::size_t d = dim_a * dim_b;
    if (!entries.is_array() || entries.size() != d * d)
        throw Error("bad state record: entries length != (dim_a*dim_b)^2");

    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& pair = entries[i];
        if (!pair.is_array() || pair.size() != 2)
            throw Error("bad state record: entry is not an [re, im] pair");
        m.data()[i] = cplx{pair[0].get<double>(), pair[1].get<double>()};
    }
    try {
        return StateRecord{id, DensityMatrix::create(dim_a, dim_b, std::move(m))};
    } catch (const Error& e) {
        throw Error(std::string("bad state record: ") + e.what());
    }
}

void write_states_jsonl(std::ostream& out, const std::vector<StateRecord>& records) {
    for (const auto& rec : records) out << state_record_line(rec.id, rec.state) << '\n';
}

std::vector<StateRecord> read_states_jsonl(std::istream& in, const std::string& path_for_errors) {
    std::vector<StateRecord> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            records.push_back(parse_state_record(line));
        } catch (const Error& e) {
            throw Error(path_for_errors + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return records;
}

// ---- CSV ----

std::optional<std::size_t> CsvTable::column(const std::string& name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
}

namespace {

// standard CSV quoting for fields carrying separators (census patterns do)
std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

std::string csv_join(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += csv_escape(fields[i]);
    }
    return line;
}

void write_csv(std::ostream& out, const CsvTable& table) {
    out << csv_join(table.header) << '\n';
    for (const auto& row : table.rows) out << csv_join(row) << '\n';
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

}  // namespace

CsvTable read_csv(std::istream& in, const std::string& path_for_errors) {
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) throw Error(path_for_errors + ": empty CSV");
    table.header = split_csv_line(line);
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != table.header.size())
            throw Error(path_for_errors + ":" + std::to_string(lineno) + ": field count mismatch");
        table.rows.push_back(std::move(fields));
    }
    return table;
}

std::string csv_cell(std::optional<double> v) { return v ? format_double(*v) : std::string(); }

std::optional<double> parse_cell(const std::string& cell) {
    if (cell.empty()) return std::nullopt;
    double v = 0.0;
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size())
        throw Error("bad numeric cell: '" + cell + "'");
    return v;
}

// ---- SVG scatter ----

namespace {

struct Ticks {
    std::vector<double> values;
};

// round tick spacing to 1/2/5 * 10^k
Ticks nice_ticks(double lo, double hi, int target) {
    Ticks t;
    const double span = hi - lo;
    if (span <= 0.0) {
        t.values = {lo};
        return t;
    }
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (mag * m >= raw) {
            step = mag * m;
            break;
        }
    }
    const double first = std::ceil(lo / step) * step;
    for (double v = first; v <= hi + step * 1e-9; v += step) t.values.push_back(v);
    return t;
}

std::string fmt_tick(double v) {
    // ticks come from nice rounding; shortest round-trip keeps them short
    if (v == 0.0) v = 0.0;  // normalize -0
    return format_double(v);
}

}  // namespace

std::string scatter_svg(const std::vector<double>& xs, const std::vector<double>& ys,
                        const SvgOptions& options) {
    const double w = options.width, h = options.height;
    const double ml = 70, mr = 20, mt = 40, mb = 50;  // margins
    const double pw = w - ml - mr, ph = h - mt - mb;

    double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
    if (!xs.empty()) {
        const auto [xa, xb] = std::minmax_element(xs.begin(), xs.end());
        const auto [ya, yb] = std::minmax_element(ys.begin(), ys.end());
        x_lo = *xa;
        x_hi = *xb;
        y_lo = *ya;
        y_hi = *yb;
    }
    // 5% padding; degenerate ranges widen to a unit box around the value
    const double xpad = x_hi > x_lo ? 0.05 * (x_hi - x_lo) : 0.5;
    const double ypad = y_hi > y_lo ? 0.05 * (y_hi - y_lo) : 0.5;
    x_lo -= xpad;
    x_hi += xpad;
    y_lo -= ypad;
    y_hi += ypad;

    auto px = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * pw; };
    auto py = [&](double y) { return mt + ph - (y - y_lo) / (y_hi - y_lo) * ph; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(w)
        << "\" height=\"" << format_double(h) << "\" viewBox=\"0 0 " << format_double(w) << " "
        << format_double(h) << "\">\n";
    svg << "<rect width=\"" << format_double(w) << "\" height=\"" << format_double(h)
        << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << format_double(w / 2) << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << options.title << "</text>\n";

    // axes
    svg << "<line x1=\"" << format_double(ml) << "\" y1=\"" << format_double(mt + ph)
        << "\" x2=\"" << format_double(ml + pw) << "\" y2=\"" << format_double(mt + ph)
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << format_double(ml) << "\" y1=\"" << format_double(mt) << "\" x2=\""
        << format_double(ml) << "\" y2=\"" << format_double(mt + ph) << "\" stroke=\"black\"/>\n";

    for (double v : nice_ticks(x_lo, x_hi, 8).values) {
        const double x = px(v);
        svg << "<line x1=\"" << format_double(x) << "\" y1=\"" << format_double(mt + ph)
            << "\" x2=\"" << format_double(x) << "\" y2=\"" << format_double(mt + ph + 5)
            << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << format_double(x) << "\" y=\"" << format_double(mt + ph + 18)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << fmt_tick(v) << "</text>\n";
    }
    for (double v : nice_ticks(y_lo, y_hi, 8).values) {
        const double y = py(v);
        svg << "<line x1=\"" << format_double(ml - 5) << "\" y1=\"" << format_double(y)
            << "\" x2=\"" << format_double(ml) << "\" y2=\"" << format_double(y)
            << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << format_double(ml - 8) << "\" y=\"" << format_double(y + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << fmt_tick(v) << "</text>\n";
    }

    svg << "<text x=\"" << format_double(ml + pw / 2) << "\" y=\"" << format_double(h - 10)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << options.x_label << "</text>\n";
    svg << "<text x=\"16\" y=\"" << format_double(mt + ph / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "transform=\"rotate(-90 16 " << format_double(mt + ph / 2) << ")\">"
        << options.y_label << "</text>\n";

    for (std::size_t i = 0; i < xs.size(); ++i) {
        svg << "<circle cx=\"" << format_double(px(xs[i])) << "\" cy=\""
            << format_double(py(ys[i])) << "\" r=\"3\" fill=\"steelblue\" fill-opacity=\"0.6\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace entb
