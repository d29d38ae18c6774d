#pragma once

#include <string>
#include <vector>

#include "entbench/channels.hpp"
#include "entbench/measures.hpp"
#include "entbench/states.hpp"

namespace entb {

enum class SweepQuantity { MeanQfi, Concurrence, Negativity, Ree };

SweepQuantity sweep_quantity_from_name(const std::string& name);
std::string sweep_quantity_name(SweepQuantity q);

struct SweepSpec {
    StateSpec state;
    std::size_t n_qubits = 2;
    ChannelKind channel = ChannelKind::AmplitudeDamping;
    std::vector<double> p_grid;  // ascending, within [0, 1]
    SweepQuantity quantity = SweepQuantity::MeanQfi;
    ReeConfig ree_cfg{};
    std::size_t jobs = 1;
};

struct SweepRow {
    double p;
    double value;
};

// Evaluates the quantity on the channel-evolved state at every grid
// point. Rows come back in ascending-p order regardless of how the grid
// points were scheduled.
std::vector<SweepRow> sweep(const SweepSpec& spec);

std::vector<double> linear_grid(double lo, double hi, std::size_t points);

struct ScanRow {
    double alpha;
    double mean_qfi;
};

// Mean QFI of alpha |W_n> + e^{i phase} beta |GHZ_n> over an alpha grid.
std::vector<ScanRow> superposition_scan(std::size_t n, std::size_t alpha_steps, double phase,
                                        std::size_t jobs = 1);

}  // namespace entb
