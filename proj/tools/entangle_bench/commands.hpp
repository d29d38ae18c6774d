#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace entb::cli {

// exit-code contract shared by every subcommand
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 2;
inline constexpr int kIoError = 3;
inline constexpr int kDataError = 4;
inline constexpr int kNoConvergence = 5;

struct SampleOptions {
    std::string dims = "2x2";
    std::size_t count = 1;
    std::string field = "complex";
    std::string measure = "hs";
    std::optional<std::uint64_t> seed;
    std::string out;
    std::size_t jobs = 0;
};

struct MeasureOptions {
    std::string in;
    std::vector<std::string> measures;  // empty = all
    double ree_tol = 1e-4;
    std::string out;
    std::size_t jobs = 0;
};

struct OptimizeOptions {
    std::string in;
    std::string step = "pi/2";
    std::string refine = "pi/3";
    std::string out;
    std::size_t jobs = 0;
};

struct SweepOptions {
    std::string state = "ghz3";
    std::string channel = "adc";
    std::string quantity = "mean_qfi";
    std::size_t p_steps = 11;
    std::string out;
    std::size_t jobs = 0;
};

struct ScanOptions {
    std::size_t n = 3;
    std::size_t alpha_steps = 101;
    double phase = 0.0;
    std::string out;
    std::size_t jobs = 0;
};

struct CensusOptions {
    std::string in;
    std::string mqfi;  // optional join
    std::vector<std::string> measures;
    double tol = 1e-6;
    std::string out;
};

struct ScatterOptions {
    std::string in;
    std::string x;
    std::string y;
    std::string out;
};

int run_sample(const SampleOptions& opt, const std::vector<std::string>& argv);
int run_measure(const MeasureOptions& opt, const std::vector<std::string>& argv);
int run_optimize(const OptimizeOptions& opt, const std::vector<std::string>& argv);
int run_sweep(const SweepOptions& opt, const std::vector<std::string>& argv);
int run_superposition_scan(const ScanOptions& opt, const std::vector<std::string>& argv);
int run_census(const CensusOptions& opt, const std::vector<std::string>& argv);
int run_scatter(const ScatterOptions& opt, const std::vector<std::string>& argv);
int run_replay(const std::string& manifest_path);

// dispatches a full argv (without the program name); used by main and replay
int dispatch(const std::vector<std::string>& argv);

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed);
double parse_angle(const std::string& text);  // "pi/2", "2pi/3", plain radians

}  // namespace entb::cli
