#pragma once

#include <optional>
#include <string>
#include <vector>

#include "saenum/criteria.hpp"
#include "saenum/scenario.hpp"
#include "saenum/spectral.hpp"

namespace sae {

enum class Strategy { ap, iss, nb };

std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& name);

/// Which snapshot count feeds the criteria in the periodogram-averaging
/// path: the total number of averaged outer products M*L, or the per-bin L.
enum class SnapshotConvention { total, per_bin };

struct PipelineOptions {
    int u_grid_size = 256;
    AcmKind ap_acm = AcmKind::lag_redundancy;      // ablation switch
    AcmKind iss_acm = AcmKind::spatial_smoothing;  // ablation switch
    SnapshotConvention criterion_snapshots = SnapshotConvention::total;
};

struct EnumerationResult {
    Strategy strategy = Strategy::ap;
    Criterion criterion = Criterion::mdlgap;
    int estimate = 0;
    CriterionCurve curve;                    // averaged curve for ISS
    std::vector<CriterionCurve> bin_curves;  // per-bin curves (ISS only)
    int effective_snapshots = 0;
};

/// Periodogram averaging: wideband periodogram -> correlation recovery ->
/// LRA-ACM -> eigenvalue magnitudes -> criterion.
EnumerationResult run_ap(const SnapshotTensor& snapshots, Criterion criterion,
                         const PipelineOptions& options = {});

/// Incoherent subspace: per-bin SCM -> coarray correlation -> SS-ACM ->
/// criterion curve; curves averaged pointwise across bins.
EnumerationResult run_iss(const SnapshotTensor& snapshots, Criterion criterion,
                          const PipelineOptions& options = {});

/// Narrowband benchmark on a single-bin tensor carrying the full
/// time-bandwidth snapshot budget.
EnumerationResult run_nb(const SnapshotTensor& snapshots, Criterion criterion,
                         const PipelineOptions& options = {});

}  // namespace sae
