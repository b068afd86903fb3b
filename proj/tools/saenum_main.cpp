#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "saenum/config.hpp"
#include "saenum/errors.hpp"
#include "saenum/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw sae::config_error("cannot write " + path.string());
    return out;
}

int cmd_coarray(const std::string& geometry_spec, bool csv) {
    sae::ArrayGeometry geometry;
    if (!geometry_spec.empty() && (std::isdigit(geometry_spec.front()) != 0)) {
        // explicit comma-separated position list
        std::stringstream ss(geometry_spec);
        std::string item;
        while (std::getline(ss, item, ',')) geometry.positions.push_back(std::stoi(item));
    } else {
        geometry = sae::geometry_from_preset(geometry_spec);
    }
    const sae::Coarray coarray = sae::difference_coarray(geometry);
    if (csv) {
        sae::write_coarray_csv(std::cout, coarray);
        return kExitOk;
    }
    std::cout << "sensors:";
    for (int p : geometry.positions) std::cout << ' ' << p;
    std::cout << "\ncontiguous P: " << coarray.contiguous_p << " (lags "
              << 1 - coarray.contiguous_p << " .. " << coarray.contiguous_p - 1 << ")\n";
    std::cout << "lag weights eta(k), k >= 0:\n";
    for (const auto& [lag, pairs] : coarray.lag_pairs) {
        if (lag < 0) continue;
        std::cout << "  k=" << lag << "  eta=" << pairs.size()
                  << (lag >= coarray.contiguous_p ? "  (outside contiguous run)" : "")
                  << '\n';
    }
    return kExitOk;
}

int cmd_enumerate(const std::string& config_path, std::uint64_t seed,
                  const std::string& strategy_name, const std::string& criterion_name,
                  const std::optional<std::string>& curves_dir) {
    const sae::LoadedConfig cfg = sae::load_config(config_path);
    const sae::Strategy strategy = sae::strategy_from_string(strategy_name);
    const sae::Criterion criterion = sae::criterion_from_string(criterion_name);

    const sae::Scenario scenario = strategy == sae::Strategy::nb
                                       ? cfg.scenario.narrowband_equivalent()
                                       : cfg.scenario;
    const sae::SnapshotTensor tensor = sae::synthesize(scenario, seed);

    sae::EnumerationResult result;
    switch (strategy) {
        case sae::Strategy::ap: result = sae::run_ap(tensor, criterion, cfg.options); break;
        case sae::Strategy::iss: result = sae::run_iss(tensor, criterion, cfg.options); break;
        case sae::Strategy::nb: result = sae::run_nb(tensor, criterion, cfg.options); break;
    }
    std::cout << sae::to_json(result) << '\n';

    if (curves_dir) {
        std::filesystem::create_directories(*curves_dir);
        const std::filesystem::path dir(*curves_dir);
        auto curve_out = open_out(dir / ("curve_" + strategy_name + "_" + criterion_name + ".csv"));
        sae::write_curve_csv(curve_out, result.curve);
        const sae::Coarray coarray = sae::difference_coarray(tensor.geometry);
        if (strategy != sae::Strategy::iss) {
            const sae::Periodogram t =
                sae::wideband_periodogram(tensor, cfg.options.u_grid_size);
            auto pg_out = open_out(dir / "periodogram.csv");
            sae::write_periodogram_csv(pg_out, t);
            auto corr_out = open_out(dir / "correlation.csv");
            sae::write_correlation_csv(corr_out, sae::correlation_from_periodogram(t, coarray));
        }
    }
    return kExitOk;
}

int cmd_sweep(const std::optional<std::string>& preset,
              const std::optional<std::string>& config_path, std::optional<int> trials,
              std::uint64_t seed, const std::string& out_dir, int threads) {
    sae::Sweep sweep;
    if (preset) {
        sweep = sae::figure_scenario(*preset);
    } else if (config_path) {
        const sae::LoadedConfig cfg = sae::load_config(*config_path);
        if (!cfg.has_sweep) throw sae::config_error("config file has no [sweep] section");
        sweep = cfg.sweep;
    } else {
        throw sae::config_error("sweep needs --preset or --config");
    }
    if (trials) sweep.trials = *trials;
    sweep.master_seed = seed;

    const sae::DetectionStats stats = sae::run_sweep(sweep, threads);

    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);
    for (std::size_t c = 0; c < stats.combos.size(); ++c) {
        const std::string name = sweep.name + "_" + to_string(stats.combos[c].first) +
                                 "_" + to_string(stats.combos[c].second) + ".csv";
        auto out = open_out(dir / name);
        sae::write_detection_csv(out, stats, static_cast<int>(c));
    }
    auto svg = open_out(dir / (sweep.name + ".svg"));
    sae::write_detection_svg(svg, stats);

    for (std::size_t c = 0; c < stats.combos.size(); ++c) {
        std::cout << to_string(stats.combos[c].first) << '+'
                  << to_string(stats.combos[c].second) << ':';
        for (std::size_t g = 0; g < stats.grid.size(); ++g)
            std::cout << ' ' << stats.cells[g][c].p_detect;
        std::cout << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wideband source enumeration on sparse arrays"};
    app.require_subcommand(1);

    auto* coarray = app.add_subcommand("coarray", "Print difference coarray of a geometry");
    std::string geometry_spec = "mra6";
    bool coarray_csv = false;
    coarray->add_option("--geometry", geometry_spec,
                        "mra6 | nested:n1,n2 | coprime:a,b | explicit list 1,2,5,...");
    coarray->add_flag("--csv", coarray_csv, "emit CSV instead of a summary");

    auto* enumerate = app.add_subcommand("enumerate", "Run one enumeration pipeline");
    std::string config_path;
    std::uint64_t seed = 0;
    std::string strategy = "ap";
    std::string criterion = "mdlgap";
    std::optional<std::string> curves_dir;
    enumerate->add_option("--config", config_path, "scenario config (TOML)")->required();
    enumerate->add_option("--seed", seed, "master seed");
    enumerate->add_option("--strategy", strategy, "ap | iss | nb");
    enumerate->add_option("--criterion", criterion, "mdl | mdlgap | sorte");
    enumerate->add_option("--curves", curves_dir, "directory for curve/periodogram CSVs");

    auto* sweep = app.add_subcommand("sweep", "Run a Monte Carlo detection sweep");
    std::optional<std::string> preset;
    std::optional<std::string> sweep_config;
    std::optional<int> trials;
    std::uint64_t sweep_seed = 0;
    std::string out_dir = "sweep_out";
    int threads = 1;
    sweep->add_option("--preset", preset, "fig2 | fig3 | fig4 | fig5");
    sweep->add_option("--config", sweep_config, "sweep config (TOML)");
    sweep->add_option("--trials", trials, "override trial count");
    sweep->add_option("--seed", sweep_seed, "master seed");
    sweep->add_option("--out", out_dir, "output directory");
    sweep->add_option("--threads", threads, "worker threads");

    try {
        app.parse(argc, argv);
        if (coarray->parsed()) return cmd_coarray(geometry_spec, coarray_csv);
        if (enumerate->parsed())
            return cmd_enumerate(config_path, seed, strategy, criterion, curves_dir);
        if (sweep->parsed())
            return cmd_sweep(preset, sweep_config, trials, sweep_seed, out_dir, threads);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;  // usage problems are config errors
    } catch (const sae::config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const sae::numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitOk;
}
