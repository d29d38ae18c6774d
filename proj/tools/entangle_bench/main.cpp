#include <CLI11.hpp>

#include "commands.hpp"
#include "entbench/errors.hpp"
#include "entbench/parallel.hpp"

namespace entb::cli {

int dispatch(const std::vector<std::string>& argv) {
    CLI::App app{"entanglement measures, QFI and state-ordering toolbox"};
    app.require_subcommand(1);

    SampleOptions sample;
    auto* s_sample = app.add_subcommand("sample", "draw random density matrices to JSONL");
    s_sample->add_option("--dims", sample.dims, "bipartite split, 2x2 or 2x3");
    s_sample->add_option("--count", sample.count, "number of states");
    s_sample->add_option("--field", sample.field, "real or complex entries");
    s_sample->add_option("--measure", sample.measure, "hs (mixed) or pure ensemble");
    std::uint64_t seed_value = 0;
    auto* seed_opt = s_sample->add_option("--seed", seed_value, "RNG seed");
    s_sample->add_option("--jobs", sample.jobs, "worker threads (0 = cores)");
    s_sample->add_option("--out", sample.out, "output JSONL path")->required();

    MeasureOptions measure;
    auto* s_measure = app.add_subcommand("measure", "entanglement measures per state to CSV");
    s_measure->add_option("--in", measure.in, "states JSONL")->required();
    s_measure->add_option("--measures", measure.measures,
                          "subset to compute (default: all)")->delimiter(',');
    s_measure->add_option("--ree-tol", measure.ree_tol, "REE duality-gap tolerance");
    s_measure->add_option("--jobs", measure.jobs, "worker threads (0 = cores)");
    s_measure->add_option("--out", measure.out, "output CSV path")->required();

    OptimizeOptions optimize;
    auto* s_optimize =
        app.add_subcommand("optimize", "grid-extremize mean QFI over local Euler rotations");
    s_optimize->add_option("--in", optimize.in, "states JSONL")->required();
    s_optimize->add_option("--step", optimize.step, "grid step, e.g. pi/2");
    s_optimize->add_option("--refine", optimize.refine, "refinement step, e.g. pi/3");
    s_optimize->add_option("--jobs", optimize.jobs, "worker threads (0 = cores)");
    s_optimize->add_option("--out", optimize.out, "output CSV path")->required();

    SweepOptions sweep;
    auto* s_sweep = app.add_subcommand("sweep", "decoherence-strength sweep of one quantity");
    s_sweep->add_option("--state", sweep.state, "ghz3|w3|wlike3|bell");
    s_sweep->add_option("--channel", sweep.channel, "adc|aac|pdc|dpc");
    s_sweep->add_option("--quantity", sweep.quantity, "mean_qfi|concurrence|negativity");
    s_sweep->add_option("--p-steps", sweep.p_steps, "grid points from 0 to 1 inclusive");
    s_sweep->add_option("--jobs", sweep.jobs, "worker threads (0 = cores)");
    s_sweep->add_option("--out", sweep.out, "output CSV path")->required();

    ScanOptions scan;
    auto* s_scan = app.add_subcommand("superposition-scan",
                                      "mean QFI of alpha*W + beta*GHZ over an alpha grid");
    s_scan->add_option("--n", scan.n, "qubit count, 2..5");
    s_scan->add_option("--alpha-steps", scan.alpha_steps, "alpha grid points");
    s_scan->add_option("--phase", scan.phase, "relative phase of the GHZ branch (radians)");
    s_scan->add_option("--jobs", scan.jobs, "worker threads (0 = cores)");
    s_scan->add_option("--out", scan.out, "output CSV path")->required();

    CensusOptions census;
    auto* s_census = app.add_subcommand("census", "ordering-class census over all state pairs");
    s_census->add_option("--in", census.in, "measure CSV")->required();
    s_census->add_option("--mqfi", census.mqfi, "optimizer CSV to join by id");
    s_census->add_option("--measures", census.measures, "columns to order by")
        ->delimiter(',')
        ->required();
    s_census->add_option("--tol", census.tol, "equality tolerance");
    s_census->add_option("--out", census.out, "output CSV path")->required();

    ScatterOptions scatter;
    auto* s_scatter = app.add_subcommand("scatter", "scatter plot of two CSV columns to SVG");
    s_scatter->add_option("--in", scatter.in, "input CSV")->required();
    s_scatter->add_option("--x", scatter.x, "x column")->required();
    s_scatter->add_option("--y", scatter.y, "y column")->required();
    s_scatter->add_option("--out", scatter.out, "output SVG path")->required();

    std::string manifest_path;
    auto* s_replay = app.add_subcommand("replay", "re-run a command from its manifest");
    s_replay->add_option("--manifest", manifest_path, "manifest JSON path")->required();

    std::vector<const char*> cargv;
    cargv.push_back("entangle-bench");
    for (const auto& a : argv) cargv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (s_sample->parsed()) {
            if (seed_opt->count() > 0) sample.seed = seed_value;
            return run_sample(sample, argv);
        }
        if (s_measure->parsed()) return run_measure(measure, argv);
        if (s_optimize->parsed()) return run_optimize(optimize, argv);
        if (s_sweep->parsed()) return run_sweep(sweep, argv);
        if (s_scan->parsed()) return run_superposition_scan(scan, argv);
        if (s_census->parsed()) return run_census(census, argv);
        if (s_scatter->parsed()) return run_scatter(scatter, argv);
        if (s_replay->parsed()) return run_replay(manifest_path);
    } catch (const InvalidSpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDataError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDataError;
    }
    return kUsageError;
}

}  // namespace entb::cli

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return entb::cli::dispatch(args);
}
