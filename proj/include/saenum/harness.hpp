#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "saenum/pipeline.hpp"

namespace sae {

enum class SweepParameter { snapshots, snr_db, separation_u };

std::string to_string(SweepParameter p);
SweepParameter sweep_parameter_from_string(const std::string& name);

/// Monte Carlo experiment: one scenario template, one swept axis, a grid of
/// values and a set of (strategy, criterion) pipelines scored per trial.
struct Sweep {
    std::string name = "sweep";
    Scenario base;
    SweepParameter parameter = SweepParameter::snapshots;
    std::vector<double> grid;
    int trials = 100;
    std::vector<Strategy> strategies;
    std::vector<Criterion> criteria;
    std::uint64_t master_seed = 0;
    PipelineOptions options;

    void validate() const;
};

/// Scenario template with the swept parameter applied. snapshots expects an
/// integer value; snr_db rescales every source power against noise_power;
/// separation_u places two sources at u = {0, value}.
Scenario apply_grid_value(const Scenario& base, SweepParameter parameter, double value);

struct WilsonInterval {
    double lo = 0.0;
    double hi = 0.0;
};

/// 95% Wilson score interval for detect_count successes out of trials.
WilsonInterval wilson_interval(int detect_count, int trials, double z = 1.959964);

struct CellStats {
    int detect_count = 0;
    int trials = 0;
    double p_detect = 0.0;
    WilsonInterval ci;
};

/// Detection probability per grid point per (strategy, criterion) pair.
struct DetectionStats {
    std::string sweep_name;
    SweepParameter parameter = SweepParameter::snapshots;
    std::vector<double> grid;
    std::vector<std::pair<Strategy, Criterion>> combos;
    std::vector<std::vector<CellStats>> cells;  // [grid index][combo index]

    const CellStats& cell(int grid_index, Strategy s, Criterion c) const;
};

/// Runs the sweep with trials distributed over threads. Per-trial seeds
/// derive from (master_seed, grid index, trial index), so the result is
/// identical for any thread count.
DetectionStats run_sweep(const Sweep& sweep, int threads = 1);

/// Scenario presets mirroring the simulation study: fig2 (two-source sample
/// curves), fig3 (separation sweep), fig4 (9-source snapshot sweep), fig5
/// (9-source SNR sweep). All use the 6-element MRA with 41 bins over
/// 80..120 Hz.
std::vector<Sweep> figure_scenarios();

/// Preset lookup by name ("fig2", "fig3", "fig4", "fig5").
Sweep figure_scenario(const std::string& name);

/// Scenario used by the figure presets before the sweep axis is applied.
Scenario figure_base_scenario();

}  // namespace sae
