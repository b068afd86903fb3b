// Acceptance suite: one check per shipped claim, one pass/fail line each.
// Monte Carlo checks run against a fixed master seed; statistical thresholds
// are asserted on the measured detection rates as-is.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "saenum/config.hpp"
#include "saenum/harness.hpp"
#include "saenum/io.hpp"
#include "saenum/rng.hpp"

using namespace sae;

namespace {

constexpr std::uint64_t kMasterSeed = 20260809;
std::string g_cli_path;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Check {
    std::string id;
    std::string title;
    double budget_seconds;
    std::function<Outcome()> run;
};

std::string run_cli(const std::string& args) {
    const std::string cmd = g_cli_path + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    std::string out;
    char buf[512];
    while (fgets(buf, sizeof(buf), pipe)) out += buf;
    pclose(pipe);
    return out;
}

std::string pct(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

// ---- C1: coarray exactness via the CLI ------------------------------------
Outcome check_coarray() {
    Outcome o;
    const std::string csv = run_cli("coarray --geometry mra6 --csv");
    std::map<int, int> eta;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        int lag = 0, count = 0;
        if (std::sscanf(line.c_str(), "%d,%d", &lag, &count) == 2) eta[lag] = count;
    }
    int total = 0;
    for (auto& [lag, count] : eta) total += count;
    bool contiguous = true;
    for (int k = -13; k <= 13; ++k) contiguous = contiguous && eta.count(k) && eta[k] >= 1;
    const Coarray ca = difference_coarray(mra6());
    o.pass = contiguous && !eta.count(14) && !eta.count(-14) && eta[0] == 6 &&
             eta[1] == 2 && eta[13] == 1 && total == 36 && ca.contiguous_p == 14;
    o.detail = "P=" + std::to_string(ca.contiguous_p) + " eta(0)=" + std::to_string(eta[0]) +
               " eta(1)=" + std::to_string(eta[1]) + " eta(13)=" + std::to_string(eta[13]) +
               " sum=" + std::to_string(total);
    return o;
}

// ---- C2: R_ss == R_LRA^2 / P ----------------------------------------------
Outcome check_acm_identity() {
    Outcome o;
    std::mt19937 rng(101);
    std::normal_distribution<double> normal;
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        CorrelationVector r;
        r.half_extent = 14;
        r.values.resize(27);
        r.at(0) = std::abs(normal(rng)) + 0.1;
        for (int k = 1; k <= 13; ++k) {
            r.at(k) = std::complex<double>(normal(rng), normal(rng));
            r.at(-k) = std::conj(r.at(k));
        }
        const Eigen::MatrixXcd ss = ss_acm(r).matrix;
        const Eigen::MatrixXcd lra = lra_acm(r).matrix;
        worst = std::max(worst, ((ss - lra * lra / 14.0).norm()) / ss.norm());
    }
    o.pass = worst < 1e-12;
    o.detail = "max rel Frobenius err = " + std::to_string(worst);
    return o;
}

// ---- C3: narrowband oracle equivalence ------------------------------------
Outcome check_narrowband_oracle() {
    Outcome o;
    std::mt19937 rng(202);
    std::uniform_real_distribution<double> unit(-0.95, 0.95);
    std::uniform_real_distribution<double> power(0.25, 4.0);
    std::uniform_int_distribution<int> n_sources(1, 5);
    std::uniform_int_distribution<int> n_snaps(1, 20);
    const Coarray ca = difference_coarray(mra6());
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        Scenario s;
        s.geometry = mra6();
        const int d = n_sources(rng);
        while (static_cast<int>(s.source_u.size()) < d) {
            const double u = unit(rng);
            bool dup = false;
            for (double v : s.source_u) dup = dup || std::abs(v - u) < 1e-3;
            if (!dup) s.source_u.push_back(u);
        }
        for (int i = 0; i < d; ++i) s.source_power.push_back(power(rng));
        s.noise_power = power(rng);
        s.freqs = {100.0};
        s.f_center = 100.0;
        s.snapshots = n_snaps(rng);
        const SnapshotTensor t = synthesize(s, 7000 + trial);
        const CorrelationVector direct = coarray_correlation(scm(t, 0), ca);
        for (int ng : {27, 64, 256}) {
            const CorrelationVector rec =
                correlation_from_periodogram(wideband_periodogram(t, ng), ca);
            worst = std::max(worst,
                             (rec.values - direct.values).norm() / direct.values.norm());
        }
    }
    o.pass = worst < 1e-10;
    o.detail = "max rel err over {27,64,256} grids = " + std::to_string(worst);
    return o;
}

// ---- C4: MDLgap definitional identity --------------------------------------
Outcome check_mdlgap_identity() {
    Outcome o;
    std::mt19937 rng(303);
    std::uniform_int_distribution<int> dim(4, 20);
    std::uniform_real_distribution<double> mag(0.01, 50.0);
    std::uniform_int_distribution<int> snaps(1, 100000);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int p = dim(rng);
        Eigen::VectorXd mags(p);
        for (int i = 0; i < p; ++i) mags(i) = mag(rng);
        std::sort(mags.data(), mags.data() + p, std::greater<double>());
        const EigSpectrum spec{mags, snaps(rng)};
        const CriterionCurve full = mdl(spec);
        const CriterionCurve gap = mdlgap(spec);
        for (int q = 1; q <= p - 1; ++q) {
            const double diff = (full.at(q) - full.at(q - 1)) / spec.effective_snapshots;
            worst = std::max(worst, std::abs(gap.at(q) - diff));
        }
    }
    o.pass = worst < 1e-9;
    o.detail = "max |MDLgap - dMDL/L| = " + std::to_string(worst);
    return o;
}

// ---- C5: consistency-proof numeric verification ----------------------------
Outcome check_h_cases() {
    Outcome o;
    std::mt19937 rng(404);
    std::uniform_int_distribution<int> dim(6, 20);
    std::uniform_real_distribution<double> power(0.05, 20.0);
    int violations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int p = dim(rng);
        std::uniform_int_distribution<int> pick(1, p - 2);
        const int d = pick(rng);
        const double noise = power(rng);
        std::vector<double> eigs;
        for (int i = 0; i < d; ++i) eigs.push_back(power(rng) + noise);
        std::sort(eigs.begin(), eigs.end(), std::greater<double>());
        eigs.insert(eigs.end(), p - d, noise);
        const double h_d = h_asymptotic(eigs, d);
        for (int delta = 1; d + delta <= p - 1; ++delta)
            if (!(h_d - h_asymptotic(eigs, d + delta) < 0.0)) ++violations;

        std::vector<double> equal(d, power(rng) + noise);
        equal.insert(equal.end(), p - d, noise);
        const double h_eq = h_asymptotic(equal, d);
        for (int delta = -1; d + delta >= 1; --delta)
            if (!(h_eq - h_asymptotic(equal, d + delta) < 0.0)) ++violations;
    }
    o.pass = violations == 0;
    o.detail = std::to_string(violations) + " violations over 1000 draws";
    return o;
}

// ---- Monte Carlo sweeps shared by C6-C8 and C11 ----------------------------
Sweep nine_source_sweep(SweepParameter parameter, std::vector<double> grid,
                        std::vector<Criterion> criteria, int snapshots) {
    Sweep sweep;
    sweep.base = figure_base_scenario();
    sweep.base.source_u = nine_source_u();
    sweep.base.source_power.assign(9, 1.0);
    sweep.base.snapshots = snapshots;
    sweep.parameter = parameter;
    sweep.grid = std::move(grid);
    sweep.trials = 300;
    sweep.strategies = {Strategy::ap, Strategy::iss};
    sweep.criteria = std::move(criteria);
    sweep.master_seed = kMasterSeed;
    return sweep;
}

Sweep sweep_c6() {
    Sweep s = nine_source_sweep(SweepParameter::snapshots, {1, 10}, {Criterion::sorte}, 3);
    s.name = "c6_fig4b";
    return s;
}

Sweep sweep_c7() {
    Sweep s = nine_source_sweep(SweepParameter::snapshots,
                                {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, {Criterion::mdlgap}, 3);
    s.name = "c7_fig4a";
    return s;
}

Sweep sweep_c8() {
    Sweep s = nine_source_sweep(SweepParameter::snr_db, {-12, -10, -8, -6, -4, -2, 0},
                                {Criterion::sorte}, 5);
    s.name = "c8_fig5b";
    return s;
}

Outcome check_fig4b() {
    Outcome o;
    const DetectionStats stats = run_sweep(sweep_c6(), 8);
    const double ap1 = stats.cell(0, Strategy::ap, Criterion::sorte).p_detect;
    const double ap10 = stats.cell(1, Strategy::ap, Criterion::sorte).p_detect;
    const double iss1 = stats.cell(0, Strategy::iss, Criterion::sorte).p_detect;
    o.pass = ap1 >= 0.70 && ap10 >= 0.90 && iss1 <= 0.30;
    o.detail = "AP(L=1)=" + pct(ap1) + " (need >=0.70), AP(L=10)=" + pct(ap10) +
               " (need >=0.90), ISS(L=1)=" + pct(iss1) + " (need <=0.30)";
    return o;
}

Outcome check_fig4a() {
    Outcome o;
    const DetectionStats stats = run_sweep(sweep_c7(), 8);
    auto first_reach = [&](Strategy s) {
        for (std::size_t g = 0; g < stats.grid.size(); ++g)
            if (stats.cell(static_cast<int>(g), s, Criterion::mdlgap).p_detect >= 0.90)
                return static_cast<int>(stats.grid[g]);
        return 1000;  // never reached on this grid
    };
    const int ap_at = first_reach(Strategy::ap);
    const int iss_at = first_reach(Strategy::iss);

    // monotone sanity along the snapshot grid, within 2 Wilson widths
    bool monotone = true;
    for (std::size_t g = 1; g < stats.grid.size(); ++g) {
        const CellStats& prev = stats.cell(static_cast<int>(g - 1), Strategy::ap, Criterion::mdlgap);
        const CellStats& cur = stats.cell(static_cast<int>(g), Strategy::ap, Criterion::mdlgap);
        if (cur.p_detect < prev.p_detect - 2.0 * (prev.ci.hi - prev.ci.lo)) monotone = false;
    }
    o.pass = ap_at < iss_at && ap_at <= 10 && monotone;
    std::string curve = "AP curve:";
    for (std::size_t g = 0; g < stats.grid.size(); ++g)
        curve += " " + pct(stats.cell(static_cast<int>(g), Strategy::ap, Criterion::mdlgap).p_detect);
    o.detail = "AP reaches 0.90 at L=" + std::to_string(ap_at) + ", ISS at L=" +
               (iss_at == 1000 ? std::string("never") : std::to_string(iss_at)) +
               (monotone ? "" : " [monotone sanity violated]") + "; " + curve;
    return o;
}

Outcome check_fig5b() {
    Outcome o;
    const DetectionStats stats = run_sweep(sweep_c8(), 8);
    bool ap_ok = true;
    std::string curve = "AP curve:";
    for (std::size_t g = 0; g < stats.grid.size(); ++g) {
        const double p = stats.cell(static_cast<int>(g), Strategy::ap, Criterion::sorte).p_detect;
        curve += " " + pct(p);
        if (stats.grid[g] >= -8.0 && p < 0.80) ap_ok = false;
    }
    const double iss0 =
        stats.cell(static_cast<int>(stats.grid.size()) - 1, Strategy::iss, Criterion::sorte).p_detect;
    o.pass = ap_ok && iss0 <= 0.50;
    o.detail = std::string(ap_ok ? "AP>=0.80 for SNR>=-8 ok" : "AP below 0.80 for some SNR>=-8") +
               ", ISS(0dB)=" + pct(iss0) + " (need <=0.50); " + curve;
    return o;
}

// ---- C9: asymptotic consistency (equal powers) ------------------------------
Outcome check_consistency() {
    Outcome o;
    Scenario s = figure_base_scenario();
    s.source_u = nine_source_u();
    s.source_power.assign(9, 1.0);
    s.freqs = {s.f_center};
    s.snapshots = 20000;
    int hits = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const SnapshotTensor t = synthesize(s, derive_seed(kMasterSeed, {9, (std::uint64_t)trial}));
        hits += run_nb(t, Criterion::mdlgap).estimate == 9 ? 1 : 0;
    }
    o.pass = hits >= 99;
    o.detail = std::to_string(hits) + "/100 trials estimated D=9";
    return o;
}

// ---- C10: two-source sample curves ------------------------------------------
Outcome check_fig2() {
    Outcome o;
    Scenario wide = figure_base_scenario();
    wide.source_u = {0.0, 0.3};
    wide.source_power = {1.0, 1.0};
    wide.snapshots = 3;
    int mdl_hits = 0, gap_hits = 0, sorte_hits = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const SnapshotTensor t = synthesize(wide, derive_seed(kMasterSeed, {10, (std::uint64_t)trial}));
        mdl_hits += run_ap(t, Criterion::mdl).estimate == 2 ? 1 : 0;
        gap_hits += run_ap(t, Criterion::mdlgap).estimate == 2 ? 1 : 0;
        sorte_hits += run_ap(t, Criterion::sorte).estimate == 2 ? 1 : 0;
    }
    Scenario close = wide;
    close.source_u = {0.0, 0.05};
    int close_gap_at_1 = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const SnapshotTensor t = synthesize(close, derive_seed(kMasterSeed, {11, (std::uint64_t)trial}));
        close_gap_at_1 += run_ap(t, Criterion::mdlgap).estimate == 1 ? 1 : 0;
    }
    o.pass = mdl_hits >= 80 && gap_hits >= 80 && sorte_hits >= 80 && close_gap_at_1 > 50;
    o.detail = "wide pair q=2 hits: mdl=" + std::to_string(mdl_hits) + "/100, mdlgap=" +
               std::to_string(gap_hits) + "/100, sorte=" + std::to_string(sorte_hits) +
               "/100 (need >=80); close pair mdlgap q=1: " + std::to_string(close_gap_at_1) +
               "/100 (need >50)";
    return o;
}

// ---- C11: determinism across thread counts ----------------------------------
Outcome check_determinism() {
    Outcome o;
    bool identical = true;
    for (const Sweep& sweep : {sweep_c6(), sweep_c7(), sweep_c8()}) {
        const DetectionStats serial = run_sweep(sweep, 1);
        const DetectionStats parallel = run_sweep(sweep, 8);
        for (std::size_t c = 0; c < serial.combos.size(); ++c) {
            std::ostringstream a, b;
            write_detection_csv(a, serial, static_cast<int>(c));
            write_detection_csv(b, parallel, static_cast<int>(c));
            if (a.str() != b.str()) identical = false;
        }
    }
    o.pass = identical;
    o.detail = identical ? "1-thread and 8-thread CSVs byte-identical for C6-C8 sweeps"
                         : "CSV mismatch between thread counts";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];
    if (g_cli_path.empty()) g_cli_path = "./saenum";

    const std::vector<Check> checks = {
        {"C1", "coarray exactness (mra6)", 1.0, check_coarray},
        {"C2", "R_ss = R_LRA^2/P identity", 5.0, check_acm_identity},
        {"C3", "narrowband oracle equivalence", 10.0, check_narrowband_oracle},
        {"C4", "MDLgap definitional identity", 5.0, check_mdlgap_identity},
        {"C5", "consistency-proof numeric cases", 10.0, check_h_cases},
        {"C6", "fig4(b) scaled reproduction (AP/ISS + SORTE)", 300.0, check_fig4b},
        {"C7", "fig4(a) ordering (AP vs ISS + MDLgap)", 300.0, check_fig4a},
        {"C8", "fig5(b) scaled reproduction (L=5 SNR sweep)", 300.0, check_fig5b},
        {"C9", "asymptotic consistency at 2e4 snapshots", 120.0, check_consistency},
        {"C10", "fig2 qualitative two-source curves", 60.0, check_fig2},
        {"C11", "determinism across thread counts", 600.0, check_determinism},
    };

    int failures = 0;
    for (const Check& check : checks) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = check.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > check.budget_seconds) {
            outcome.pass = false;
            outcome.detail += " [runtime budget exceeded]";
        }
        char timing[32];
        std::snprintf(timing, sizeof(timing), "%.1fs", elapsed);
        std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << check.id << ' '
                  << check.title << " (" << timing << "): " << outcome.detail << '\n';
        std::cout.flush();
        if (!outcome.pass) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
