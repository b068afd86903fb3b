#include "saenum/pipeline.hpp"

#include <algorithm>

#include "saenum/errors.hpp"

namespace sae {

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::ap: return "ap";
        case Strategy::iss: return "iss";
        case Strategy::nb: return "nb";
    }
    return "?";
}

Strategy strategy_from_string(const std::string& name) {
    if (name == "ap") return Strategy::ap;
    if (name == "iss") return Strategy::iss;
    if (name == "nb") return Strategy::nb;
    throw config_error("unknown strategy: " + name);
}

namespace {

CriterionCurve evaluate(Criterion criterion, const EigSpectrum& spectrum) {
    switch (criterion) {
        case Criterion::mdl: return mdl(spectrum);
        case Criterion::mdlgap: return mdlgap(spectrum);
        case Criterion::sorte: return sorte(spectrum);
    }
    throw config_error("unknown criterion");
}

AugmentedCovariance build_acm(AcmKind kind, const CorrelationVector& r) {
    return kind == AcmKind::lag_redundancy ? lra_acm(r) : ss_acm(r);
}

}  // namespace

EnumerationResult run_ap(const SnapshotTensor& snapshots, Criterion criterion,
                         const PipelineOptions& options) {
    const Coarray coarray = difference_coarray(snapshots.geometry);
    const Periodogram t = wideband_periodogram(snapshots, options.u_grid_size);
    const CorrelationVector r = correlation_from_periodogram(t, coarray);
    const int l_eff = options.criterion_snapshots == SnapshotConvention::total
                          ? snapshots.bin_count() * snapshots.snapshot_count()
                          : snapshots.snapshot_count();
    const EigSpectrum spectrum = eig_magnitudes(build_acm(options.ap_acm, r), l_eff);

    EnumerationResult result;
    result.strategy = Strategy::ap;
    result.criterion = criterion;
    result.curve = evaluate(criterion, spectrum);
    result.estimate = result.curve.argmin_q;
    result.effective_snapshots = l_eff;
    return result;
}

EnumerationResult run_iss(const SnapshotTensor& snapshots, Criterion criterion,
                          const PipelineOptions& options) {
    if (snapshots.bin_count() < 1) throw config_error("tensor has no frequency bins");
    const Coarray coarray = difference_coarray(snapshots.geometry);
    const int l = snapshots.snapshot_count();

    EnumerationResult result;
    result.strategy = Strategy::iss;
    result.criterion = criterion;
    result.effective_snapshots = l;
    result.bin_curves.reserve(snapshots.bin_count());
    for (int m = 0; m < snapshots.bin_count(); ++m) {
        const CorrelationVector r = coarray_correlation(scm(snapshots, m), coarray);
        const EigSpectrum spectrum = eig_magnitudes(build_acm(options.iss_acm, r), l);
        result.bin_curves.push_back(evaluate(criterion, spectrum));
    }

    // pointwise mean across bins; a +inf value in any bin pins the average
    CriterionCurve avg = result.bin_curves.front();
    for (std::size_t m = 1; m < result.bin_curves.size(); ++m)
        for (std::size_t i = 0; i < avg.values.size(); ++i)
            avg.values[i] += result.bin_curves[m].values[i];
    for (double& v : avg.values) v /= static_cast<double>(result.bin_curves.size());
    avg.argmin_q = avg.q_begin +
                   static_cast<int>(std::min_element(avg.values.begin(), avg.values.end()) -
                                    avg.values.begin());
    result.curve = std::move(avg);
    result.estimate = result.curve.argmin_q;
    return result;
}

EnumerationResult run_nb(const SnapshotTensor& snapshots, Criterion criterion,
                         const PipelineOptions& options) {
    if (snapshots.bin_count() != 1)
        throw config_error("narrowband benchmark expects a single-bin tensor");
    const Coarray coarray = difference_coarray(snapshots.geometry);
    const CorrelationVector r = coarray_correlation(scm(snapshots, 0), coarray);
    const int l_eff = snapshots.snapshot_count();
    const EigSpectrum spectrum = eig_magnitudes(build_acm(options.ap_acm, r), l_eff);

    EnumerationResult result;
    result.strategy = Strategy::nb;
    result.criterion = criterion;
    result.curve = evaluate(criterion, spectrum);
    result.estimate = result.curve.argmin_q;
    result.effective_snapshots = l_eff;
    return result;
}

}  // namespace sae
