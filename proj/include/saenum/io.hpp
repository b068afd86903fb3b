#pragma once

#include <iosfwd>
#include <string>

#include "saenum/harness.hpp"

namespace sae {

/// coarray summary: lag, eta, pair list (one line per lag)
void write_coarray_csv(std::ostream& out, const Coarray& coarray);

/// columns: u,value
void write_periodogram_csv(std::ostream& out, const Periodogram& periodogram);

/// columns: k,re,im
void write_correlation_csv(std::ostream& out, const CorrelationVector& r);

/// row-major matrix dump, re/im interleaved
void write_acm_csv(std::ostream& out, const AugmentedCovariance& acm);

/// columns: q,value,is_argmin
void write_curve_csv(std::ostream& out, const CriterionCurve& curve);

/// columns: grid_value,p_detect,ci_lo,ci_hi,trials for one (strategy, criterion)
void write_detection_csv(std::ostream& out, const DetectionStats& stats, int combo_index);

/// line chart of every (strategy, criterion) series in the sweep result
void write_detection_svg(std::ostream& out, const DetectionStats& stats);

/// EnumerationResult as a JSON document (+inf serialized as null)
std::string to_json(const EnumerationResult& result, bool include_bin_curves = false);

}  // namespace sae
