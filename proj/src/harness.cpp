#include "saenum/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "saenum/errors.hpp"
#include "saenum/rng.hpp"

namespace sae {

std::string to_string(SweepParameter p) {
    switch (p) {
        case SweepParameter::snapshots: return "snapshots";
        case SweepParameter::snr_db: return "snr_db";
        case SweepParameter::separation_u: return "separation_u";
    }
    return "?";
}

SweepParameter sweep_parameter_from_string(const std::string& name) {
    if (name == "snapshots") return SweepParameter::snapshots;
    if (name == "snr_db") return SweepParameter::snr_db;
    if (name == "separation_u") return SweepParameter::separation_u;
    throw config_error("unknown sweep parameter: " + name);
}

void Sweep::validate() const {
    base.validate();
    if (trials < 1) throw config_error("sweep needs trials >= 1");
    if (grid.empty()) throw config_error("sweep grid is empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (grid[i] <= grid[i - 1]) throw config_error("sweep grid must be sorted ascending");
    if (strategies.empty() || criteria.empty())
        throw config_error("sweep needs at least one strategy and one criterion");
}

Scenario apply_grid_value(const Scenario& base, SweepParameter parameter, double value) {
    Scenario s = base;
    switch (parameter) {
        case SweepParameter::snapshots: {
            const int l = static_cast<int>(std::lround(value));
            if (l < 1) throw config_error("snapshot grid value must be >= 1");
            s.snapshots = l;
            break;
        }
        case SweepParameter::snr_db: {
            const double power = s.noise_power * std::pow(10.0, value / 10.0);
            for (double& p : s.source_power) p = power;
            break;
        }
        case SweepParameter::separation_u: {
            if (value <= 0.0 || value > 1.0)
                throw config_error("separation grid value must be in (0, 1]");
            const double power = base.source_power.front();
            s.source_u = {0.0, value};
            s.source_power = {power, power};
            break;
        }
    }
    return s;
}

WilsonInterval wilson_interval(int detect_count, int trials, double z) {
    if (trials < 1) throw config_error("Wilson interval needs trials >= 1");
    const double n = trials;
    const double p = static_cast<double>(detect_count) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

const CellStats& DetectionStats::cell(int grid_index, Strategy s, Criterion c) const {
    for (std::size_t i = 0; i < combos.size(); ++i)
        if (combos[i].first == s && combos[i].second == c)
            return cells.at(grid_index).at(i);
    throw config_error("no such (strategy, criterion) pair in sweep results");
}

namespace {

struct TrialOutcome {
    std::vector<bool> detected;  // per combo
};

EnumerationResult run_strategy(Strategy strategy, const SnapshotTensor& wideband,
                               const SnapshotTensor* narrowband, Criterion criterion,
                               const PipelineOptions& options) {
    switch (strategy) {
        case Strategy::ap: return run_ap(wideband, criterion, options);
        case Strategy::iss: return run_iss(wideband, criterion, options);
        case Strategy::nb: return run_nb(*narrowband, criterion, options);
    }
    throw config_error("unknown strategy");
}

}  // namespace

DetectionStats run_sweep(const Sweep& sweep, int threads) {
    sweep.validate();
    if (threads < 1) threads = 1;

    std::vector<std::pair<Strategy, Criterion>> combos;
    for (Strategy s : sweep.strategies)
        for (Criterion c : sweep.criteria) combos.emplace_back(s, c);

    const int n_grid = static_cast<int>(sweep.grid.size());
    const int n_tasks = n_grid * sweep.trials;
    std::vector<TrialOutcome> outcomes(n_tasks);

    bool wants_wideband = false, wants_narrowband = false;
    for (Strategy s : sweep.strategies) {
        if (s == Strategy::nb) wants_narrowband = true;
        else wants_wideband = true;
    }

    std::atomic<int> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    std::string error_context;

    auto worker = [&] {
        for (;;) {
            const int task = next.fetch_add(1);
            if (task >= n_tasks) return;
            {
                std::lock_guard lock(error_mutex);
                if (error) return;
            }
            const int g = task / sweep.trials;
            const int trial = task % sweep.trials;
            try {
                const Scenario scenario =
                    apply_grid_value(sweep.base, sweep.parameter, sweep.grid[g]);
                const int true_d = scenario.source_count();

                SnapshotTensor wideband, narrowband;
                if (wants_wideband)
                    wideband = synthesize(scenario, derive_seed(sweep.master_seed,
                                                                {static_cast<std::uint64_t>(g),
                                                                 static_cast<std::uint64_t>(trial), 0}));
                if (wants_narrowband)
                    narrowband = synthesize(scenario.narrowband_equivalent(),
                                            derive_seed(sweep.master_seed,
                                                        {static_cast<std::uint64_t>(g),
                                                         static_cast<std::uint64_t>(trial), 1}));

                TrialOutcome& out = outcomes[task];
                out.detected.resize(combos.size());
                for (std::size_t i = 0; i < combos.size(); ++i) {
                    const EnumerationResult r = run_strategy(
                        combos[i].first, wideband,
                        wants_narrowband ? &narrowband : nullptr, combos[i].second,
                        sweep.options);
                    out.detected[i] = (r.estimate == true_d);
                }
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                    error_context = "sweep '" + sweep.name + "' failed at grid value " +
                                    std::to_string(sweep.grid[g]) + ", trial " +
                                    std::to_string(trial);
                }
                return;
            }
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (error) {
        try {
            std::rethrow_exception(error);
        } catch (const std::exception& e) {
            throw numerical_error(error_context + ": " + e.what());
        }
    }

    DetectionStats stats;
    stats.sweep_name = sweep.name;
    stats.parameter = sweep.parameter;
    stats.grid = sweep.grid;
    stats.combos = combos;
    stats.cells.assign(n_grid, std::vector<CellStats>(combos.size()));
    for (int g = 0; g < n_grid; ++g) {
        for (std::size_t i = 0; i < combos.size(); ++i) {
            CellStats& cell = stats.cells[g][i];
            cell.trials = sweep.trials;
            for (int trial = 0; trial < sweep.trials; ++trial)
                cell.detect_count += outcomes[g * sweep.trials + trial].detected[i] ? 1 : 0;
            cell.p_detect = static_cast<double>(cell.detect_count) / sweep.trials;
            cell.ci = wilson_interval(cell.detect_count, sweep.trials);
        }
    }
    return stats;
}

Scenario figure_base_scenario() {
    Scenario s;
    s.geometry = mra6();
    s.noise_power = 1.0;
    s.f_center = 100.0;
    s.prop_speed = 343.0;
    for (int f = 80; f <= 120; ++f) s.freqs.push_back(static_cast<double>(f));
    return s;
}

std::vector<Sweep> figure_scenarios() {
    std::vector<Sweep> sweeps;
    const Scenario base = figure_base_scenario();

    {
        Sweep fig2;
        fig2.name = "fig2";
        fig2.base = base;
        fig2.base.source_u = {0.0, 0.3};
        fig2.base.source_power = {1.0, 1.0};
        fig2.base.snapshots = 3;
        fig2.parameter = SweepParameter::separation_u;
        fig2.grid = {0.05, 0.3};
        fig2.trials = 100;
        fig2.strategies = {Strategy::ap, Strategy::nb};
        fig2.criteria = {Criterion::mdl, Criterion::mdlgap, Criterion::sorte};
        sweeps.push_back(std::move(fig2));
    }
    {
        Sweep fig3;
        fig3.name = "fig3";
        fig3.base = base;
        fig3.base.source_u = {0.0, 0.3};
        fig3.base.source_power = {1.0, 1.0};
        fig3.base.snapshots = 3;
        fig3.parameter = SweepParameter::separation_u;
        for (int i = 1; i <= 40; ++i) fig3.grid.push_back(0.01 * i);
        fig3.trials = 200;
        fig3.strategies = {Strategy::ap, Strategy::iss, Strategy::nb};
        fig3.criteria = {Criterion::mdl, Criterion::mdlgap, Criterion::sorte};
        sweeps.push_back(std::move(fig3));
    }
    {
        Sweep fig4;
        fig4.name = "fig4";
        fig4.base = base;
        fig4.base.source_u = nine_source_u();
        fig4.base.source_power.assign(9, 1.0);
        fig4.base.snapshots = 3;
        fig4.parameter = SweepParameter::snapshots;
        for (int l = 1; l <= 10; ++l) fig4.grid.push_back(static_cast<double>(l));
        fig4.trials = 500;
        fig4.strategies = {Strategy::ap, Strategy::iss, Strategy::nb};
        fig4.criteria = {Criterion::mdlgap, Criterion::sorte};
        sweeps.push_back(std::move(fig4));
    }
    {
        Sweep fig5;
        fig5.name = "fig5";
        fig5.base = base;
        fig5.base.source_u = nine_source_u();
        fig5.base.source_power.assign(9, 1.0);
        fig5.base.snapshots = 5;
        fig5.parameter = SweepParameter::snr_db;
        for (int db = -20; db <= 0; db += 2) fig5.grid.push_back(static_cast<double>(db));
        fig5.trials = 500;
        fig5.strategies = {Strategy::ap, Strategy::iss, Strategy::nb};
        fig5.criteria = {Criterion::mdlgap, Criterion::sorte};
        sweeps.push_back(std::move(fig5));
    }
    return sweeps;
}

Sweep figure_scenario(const std::string& name) {
    for (Sweep& s : figure_scenarios())
        if (s.name == name) return s;
    throw config_error("unknown figure preset: " + name);
}

}  // namespace sae
