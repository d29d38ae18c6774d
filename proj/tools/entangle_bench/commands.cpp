#include "commands.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "entbench/channels.hpp"
#include "entbench/io.hpp"
#include "entbench/measures.hpp"
#include "entbench/ordering.hpp"
#include "entbench/parallel.hpp"
#include "entbench/qfi.hpp"
#include "entbench/states.hpp"
#include "entbench/sweeps.hpp"

#ifndef ENTB_VERSION
#define ENTB_VERSION "0.0.0"
#endif

namespace entb::cli {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string iso_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
    return buf;
}

// Manifest written next to every output file; holds everything needed to
// reproduce the run (timestamps excluded from the reproducibility contract).
struct ManifestWriter {
    nlohmann::json doc;
    std::string started = iso_now();

    ManifestWriter(const std::string& command, const std::vector<std::string>& argv) {
        doc["command"] = command;
        doc["argv"] = argv;
        doc["version"] = ENTB_VERSION;
        doc["inputs"] = nlohmann::json::array();
        doc["outputs"] = nlohmann::json::array();
    }

    void input(const std::string& path) { doc["inputs"].push_back(path); }
    void output(const std::string& path) { doc["outputs"].push_back(path); }

    int finalize(const std::string& out_path) {
        doc["started_at"] = started;
        doc["finished_at"] = iso_now();
        std::ofstream f(out_path + ".manifest.json", std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write manifest for " << out_path << "\n";
            return kIoError;
        }
        f << doc.dump(2) << "\n";
        return f ? kOk : kIoError;
    }
};

int write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return kIoError;
    }
    f << content;
    if (!f) {
        std::cerr << "error: write failed for " << path << "\n";
        return kIoError;
    }
    return kOk;
}

std::optional<std::pair<std::size_t, std::size_t>> parse_dims(const std::string& text) {
    if (text == "2x2") return {{2, 2}};
    if (text == "2x3") return {{2, 3}};
    return std::nullopt;
}

std::vector<StateRecord> load_states(const std::string& path, int& rc) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << path << "\n";
        rc = kIoError;
        return {};
    }
    try {
        rc = kOk;
        return read_states_jsonl(f, path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = kDataError;
        return {};
    }
}

const std::vector<std::string> kMeasureColumns = {
    "concurrence", "c_max", "negativity", "log_negativity", "neg_eig", "eof", "ree", "ree_gap"};

MeasureSelection selection_from_names(const std::vector<std::string>& names, bool& ok) {
    ok = true;
    if (names.empty()) return {};
    MeasureSelection sel;
    sel.concurrence = sel.c_max = sel.negativity = sel.log_negativity = sel.neg_eig = sel.eof =
        sel.ree = false;
    for (const auto& n : names) {
        if (n == "concurrence") sel.concurrence = true;
        else if (n == "c_max") sel.c_max = true;
        else if (n == "negativity") sel.negativity = true;
        else if (n == "log_negativity") sel.log_negativity = true;
        else if (n == "neg_eig") sel.neg_eig = true;
        else if (n == "eof") sel.eof = true;
        else if (n == "ree") sel.ree = true;
        else ok = false;
    }
    return sel;
}

}  // namespace

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed) {
    if (flag_seed) return *flag_seed;
    if (const char* env = std::getenv("ENTANGLE_BENCH_SEED")) {
        std::uint64_t v = 0;
        const auto res = std::from_chars(env, env + std::strlen(env), v);
        if (res.ec == std::errc{} && res.ptr == env + std::strlen(env)) return v;
    }
    return 0;
}

double parse_angle(const std::string& text) {
    // accepted forms: "pi", "pi/2", "2pi/3", "0.7853981", "1.2*pi"
    std::string s = text;
    double factor = 1.0;
    const auto star = s.find("*pi");
    if (star != std::string::npos && star + 3 == s.size()) {
        factor = kPi;
        s = s.substr(0, star);
    }
    const auto pi_pos = s.find("pi");
    if (pi_pos != std::string::npos) {
        const std::string num = s.substr(0, pi_pos);
        const std::string rest = s.substr(pi_pos + 2);
        double mult = num.empty() ? 1.0 : std::stod(num);
        double div = 1.0;
        if (!rest.empty()) {
            if (rest[0] != '/') throw InvalidSpecError("bad angle: " + text);
            div = std::stod(rest.substr(1));
        }
        return mult * kPi / div;
    }
    return std::stod(s) * factor;
}

int run_sample(const SampleOptions& opt, const std::vector<std::string>& argv) {
    const auto dims = parse_dims(opt.dims);
    if (!dims) {
        std::cerr << "error: --dims must be 2x2 or 2x3\n";
        return kUsageError;
    }
    if (opt.field != "real" && opt.field != "complex") {
        std::cerr << "error: --field must be real or complex\n";
        return kUsageError;
    }
    if (opt.measure != "hs" && opt.measure != "pure") {
        std::cerr << "error: --measure must be hs or pure\n";
        return kUsageError;
    }

    ManifestWriter manifest("sample", argv);
    const std::uint64_t seed = resolve_seed(opt.seed);
    manifest.doc["seed"] = seed;

    EnsembleSpec spec;
    spec.count = std::max<std::size_t>(opt.count, 1);
    spec.seed = seed;
    spec.field = opt.field == "real" ? Field::Real : Field::Complex;
    spec.measure = opt.measure == "hs" ? EnsembleMeasure::HilbertSchmidt
                                       : EnsembleMeasure::HaarPure;
    spec.dim_a = dims->first;
    spec.dim_b = dims->second;

    std::vector<std::string> lines(opt.count);
    parallel_for(opt.count, opt.jobs, [&](std::size_t k) {
        lines[k] = state_record_line(static_cast<std::int64_t>(k), sample_state(spec, k));
    });

    std::string body;
    for (const auto& line : lines) {
        body += line;
        body += '\n';
    }
    if (const int rc = write_text_file(opt.out, body); rc != kOk) return rc;
    manifest.output(opt.out);
    return manifest.finalize(opt.out);
}

int run_measure(const MeasureOptions& opt, const std::vector<std::string>& argv) {
    bool names_ok = true;
    const MeasureSelection sel = selection_from_names(opt.measures, names_ok);
    if (!names_ok) {
        std::cerr << "error: unknown measure name in --measures\n";
        return kUsageError;
    }
    if (!(opt.ree_tol > 0.0)) {
        std::cerr << "error: --ree-tol must be positive\n";
        return kUsageError;
    }

    ManifestWriter manifest("measure", argv);
    manifest.input(opt.in);

    int rc = kOk;
    const auto states = load_states(opt.in, rc);
    if (rc != kOk) return rc;

    ReeConfig ree_cfg;
    ree_cfg.gap_tolerance = opt.ree_tol;

    std::vector<MeasureRecord> records(states.size());
    parallel_for(states.size(), opt.jobs, [&](std::size_t i) {
        records[i] = measure_all(states[i].state, ree_cfg, sel);
    });

    CsvTable table;
    table.header = {"id"};
    table.header.insert(table.header.end(), kMeasureColumns.begin(), kMeasureColumns.end());
    bool any_unconverged = false;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto& r = records[i];
        table.rows.push_back({std::to_string(states[i].id), csv_cell(r.concurrence),
                              csv_cell(r.c_max), csv_cell(r.negativity),
                              csv_cell(r.log_negativity), csv_cell(r.neg_eig), csv_cell(r.eof),
                              csv_cell(r.ree), csv_cell(r.ree_gap)});
        if (r.ree && !r.ree_converged) any_unconverged = true;
    }

    std::ostringstream out;
    write_csv(out, table);
    if (const int wrc = write_text_file(opt.out, out.str()); wrc != kOk) return wrc;
    manifest.output(opt.out);
    manifest.doc["ree_gap_tolerance"] = opt.ree_tol;
    if (const int mrc = manifest.finalize(opt.out); mrc != kOk) return mrc;
    return any_unconverged ? kNoConvergence : kOk;
}

int run_optimize(const OptimizeOptions& opt, const std::vector<std::string>& argv) {
    OptimizeConfig cfg;
    try {
        cfg.step = parse_angle(opt.step);
        cfg.refine_step = parse_angle(opt.refine);
    } catch (const std::exception&) {
        std::cerr << "error: bad angle in --step/--refine\n";
        return kUsageError;
    }
    cfg.jobs = opt.jobs;

    ManifestWriter manifest("optimize", argv);
    manifest.input(opt.in);
    manifest.doc["step"] = cfg.step;
    manifest.doc["refine_step"] = cfg.refine_step;

    int rc = kOk;
    const auto states = load_states(opt.in, rc);
    if (rc != kOk) return rc;
    for (const auto& s : states) {
        if (!s.state.is_two_qubit()) {
            std::cerr << "error: optimize requires two-qubit states (id " << s.id << ")\n";
            return kDataError;
        }
    }

    std::vector<DensityMatrix> mats;
    mats.reserve(states.size());
    for (const auto& s : states) mats.push_back(s.state);
    OptimizeConfig batch_cfg = cfg;
    batch_cfg.jobs = opt.jobs == 0 ? default_jobs() : opt.jobs;
    const auto results = batch_optimize(mats, batch_cfg);

    CsvTable table;
    table.header = {"state_id",   "qfi",        "mqfi_max",   "mqfi_min",
                    "max_alpha1", "max_beta1",  "max_gamma1", "max_alpha2",
                    "max_beta2",  "max_gamma2", "min_alpha1", "min_beta1",
                    "min_gamma1", "min_alpha2", "min_beta2",  "min_gamma2"};
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        table.rows.push_back(
            {std::to_string(states[i].id), format_double(r.original), format_double(r.maximized),
             format_double(r.minimized), format_double(r.max_angles[0].alpha),
             format_double(r.max_angles[0].beta), format_double(r.max_angles[0].gamma),
             format_double(r.max_angles[1].alpha), format_double(r.max_angles[1].beta),
             format_double(r.max_angles[1].gamma), format_double(r.min_angles[0].alpha),
             format_double(r.min_angles[0].beta), format_double(r.min_angles[0].gamma),
             format_double(r.min_angles[1].alpha), format_double(r.min_angles[1].beta),
             format_double(r.min_angles[1].gamma)});
    }

    std::ostringstream out;
    write_csv(out, table);
    if (const int wrc = write_text_file(opt.out, out.str()); wrc != kOk) return wrc;
    manifest.output(opt.out);
    return manifest.finalize(opt.out);
}

int run_sweep(const SweepOptions& opt, const std::vector<std::string>& argv) {
    SweepSpec spec;
    if (opt.state == "ghz3") {
        spec.state = family::Ghz{3};
        spec.n_qubits = 3;
    } else if (opt.state == "w3") {
        spec.state = family::W{3};
        spec.n_qubits = 3;
    } else if (opt.state == "wlike3") {
        spec.state = family::WLike3{};
        spec.n_qubits = 3;
    } else if (opt.state == "bell") {
        spec.state = family::Bell{1};
        spec.n_qubits = 2;
    } else {
        std::cerr << "error: unknown --state (ghz3|w3|wlike3|bell)\n";
        return kUsageError;
    }
    try {
        spec.channel = channel_from_name(opt.channel);
        spec.quantity = sweep_quantity_from_name(opt.quantity);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    if (opt.p_steps < 2) {
        std::cerr << "error: --p-steps must be >= 2\n";
        return kUsageError;
    }
    if (spec.n_qubits == 3 &&
        (spec.quantity == SweepQuantity::Concurrence || spec.quantity == SweepQuantity::Ree)) {
        std::cerr << "error: " << opt.quantity << " needs a two-qubit state\n";
        return kUsageError;
    }
    spec.p_grid = linear_grid(0.0, 1.0, opt.p_steps);
    spec.jobs = opt.jobs == 0 ? default_jobs() : opt.jobs;

    ManifestWriter manifest("sweep", argv);
    const auto rows = sweep(spec);

    CsvTable table;
    table.header = {"p", "value"};
    for (const auto& r : rows) table.rows.push_back({format_double(r.p), format_double(r.value)});

    std::ostringstream out;
    write_csv(out, table);
    if (const int wrc = write_text_file(opt.out, out.str()); wrc != kOk) return wrc;
    manifest.output(opt.out);
    return manifest.finalize(opt.out);
}

int run_superposition_scan(const ScanOptions& opt, const std::vector<std::string>& argv) {
    if (opt.n < 2 || opt.n > 5) {
        std::cerr << "error: --n must be in [2, 5]\n";
        return kUsageError;
    }
    if (opt.alpha_steps < 2) {
        std::cerr << "error: --alpha-steps must be >= 2\n";
        return kUsageError;
    }

    ManifestWriter manifest("superposition-scan", argv);
    const auto rows = superposition_scan(opt.n, opt.alpha_steps, opt.phase,
                                         opt.jobs == 0 ? default_jobs() : opt.jobs);

    CsvTable table;
    table.header = {"alpha", "mean_qfi"};
    for (const auto& r : rows)
        table.rows.push_back({format_double(r.alpha), format_double(r.mean_qfi)});

    std::ostringstream out;
    write_csv(out, table);
    if (const int wrc = write_text_file(opt.out, out.str()); wrc != kOk) return wrc;
    manifest.output(opt.out);
    return manifest.finalize(opt.out);
}

int run_census(const CensusOptions& opt, const std::vector<std::string>& argv) {
    if (opt.measures.empty()) {
        std::cerr << "error: --measures must name at least one column\n";
        return kUsageError;
    }

    ManifestWriter manifest("census", argv);
    manifest.input(opt.in);

    std::ifstream f(opt.in, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << opt.in << "\n";
        return kIoError;
    }
    CsvTable table;
    try {
        table = read_csv(f, opt.in);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDataError;
    }

    // optional join of optimizer columns by id
    if (!opt.mqfi.empty()) {
        std::ifstream mf(opt.mqfi, std::ios::binary);
        if (!mf) {
            std::cerr << "error: cannot open " << opt.mqfi << "\n";
            return kIoError;
        }
        CsvTable mqfi;
        try {
            mqfi = read_csv(mf, opt.mqfi);
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kDataError;
        }
        manifest.input(opt.mqfi);
        const auto id_col = table.column("id");
        const auto mid_col = mqfi.column("state_id");
        if (!id_col || !mid_col) {
            std::cerr << "error: census join needs 'id' and 'state_id' columns\n";
            return kDataError;
        }
        std::map<std::string, std::size_t> by_id;
        for (std::size_t r = 0; r < mqfi.rows.size(); ++r)
            by_id[mqfi.rows[r][*mid_col]] = r;
        std::vector<std::string> joined = {"qfi", "mqfi_max", "mqfi_min"};
        for (const auto& col : joined) {
            if (!mqfi.column(col)) {
                std::cerr << "error: column " << col << " missing from " << opt.mqfi << "\n";
                return kDataError;
            }
            table.header.push_back(col);
        }
        for (auto& row : table.rows) {
            const auto it = by_id.find(row[*id_col]);
            if (it == by_id.end()) {
                std::cerr << "error: id " << row[*id_col] << " missing from " << opt.mqfi << "\n";
                return kDataError;
            }
            for (const auto& col : joined) row.push_back(mqfi.rows[it->second][*mqfi.column(col)]);
        }
    }

    std::vector<std::size_t> cols;
    for (const auto& m : opt.measures) {
        const auto c = table.column(m);
        if (!c) {
            std::cerr << "error: column " << m << " not in input\n";
            return kDataError;
        }
        cols.push_back(*c);
    }
    const auto gap_col = table.column("ree_gap");

    std::vector<std::vector<double>> records;
    std::vector<std::vector<double>> record_tols;
    records.reserve(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        std::vector<double> vals, tols_row;
        for (std::size_t m = 0; m < cols.size(); ++m) {
            std::optional<double> v;
            try {
                v = parse_cell(table.rows[r][cols[m]]);
            } catch (const Error& e) {
                std::cerr << "error: " << opt.in << " row " << r + 1 << ": " << e.what() << "\n";
                return kDataError;
            }
            if (!v) {
                std::cerr << "error: row " << r + 1 << " lacks measure " << opt.measures[m]
                          << "\n";
                return kDataError;
            }
            vals.push_back(*v);
            // REE equality widens with the estimator's duality gap
            double tol_floor = 0.0;
            if (opt.measures[m] == "ree" && gap_col) {
                const auto gap = parse_cell(table.rows[r][*gap_col]);
                if (gap) tol_floor = 2.0 * *gap;
            }
            tols_row.push_back(tol_floor);
        }
        records.push_back(std::move(vals));
        record_tols.push_back(std::move(tols_row));
    }

    const std::vector<double> tols(opt.measures.size(), opt.tol);
    const auto entries = census(records, opt.measures, tols, record_tols);

    const std::size_t total = records.size() * (records.size() - 1) / 2;
    CsvTable out_table;
    out_table.header = {"pattern", "count", "frequency"};
    for (const auto& e : entries)
        out_table.rows.push_back({e.pattern.to_string(), std::to_string(e.count),
                                  format_double(total ? static_cast<double>(e.count) /
                                                            static_cast<double>(total)
                                                      : 0.0)});

    std::ostringstream out;
    write_csv(out, out_table);
    if (const int wrc = write_text_file(opt.out, out.str()); wrc != kOk) return wrc;
    manifest.output(opt.out);
    return manifest.finalize(opt.out);
}

int run_scatter(const ScatterOptions& opt, const std::vector<std::string>& argv) {
    ManifestWriter manifest("scatter", argv);
    manifest.input(opt.in);

    std::ifstream f(opt.in, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << opt.in << "\n";
        return kIoError;
    }
    CsvTable table;
    try {
        table = read_csv(f, opt.in);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDataError;
    }
    const auto xc = table.column(opt.x);
    const auto yc = table.column(opt.y);
    if (!xc || !yc) {
        std::cerr << "error: missing column " << (xc ? opt.y : opt.x) << "\n";
        return kDataError;
    }

    std::vector<double> xs, ys;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        std::optional<double> x, y;
        try {
            x = parse_cell(table.rows[r][*xc]);
            y = parse_cell(table.rows[r][*yc]);
        } catch (const Error& e) {
            std::cerr << "error: " << opt.in << " row " << r + 1 << ": " << e.what() << "\n";
            return kDataError;
        }
        if (!x || !y) continue;  // inapplicable cells plot nothing
        xs.push_back(*x);
        ys.push_back(*y);
    }

    SvgOptions svg;
    svg.title = opt.y + " vs " + opt.x;
    svg.x_label = opt.x;
    svg.y_label = opt.y;
    if (const int wrc = write_text_file(opt.out, scatter_svg(xs, ys, svg)); wrc != kOk)
        return wrc;
    manifest.output(opt.out);
    return manifest.finalize(opt.out);
}

int run_replay(const std::string& manifest_path) {
    std::ifstream f(manifest_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << manifest_path << "\n";
        return kIoError;
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: bad manifest: " << e.what() << "\n";
        return kDataError;
    }
    if (!doc.contains("argv") || !doc["argv"].is_array()) {
        std::cerr << "error: manifest lacks argv\n";
        return kDataError;
    }
    std::vector<std::string> argv;
    for (const auto& a : doc["argv"]) argv.push_back(a.get<std::string>());
    return dispatch(argv);
}

}  // namespace entb::cli
