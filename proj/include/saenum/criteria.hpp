#pragma once

#include <string>
#include <vector>

#include "saenum/acm.hpp"

namespace sae {

enum class Criterion { mdl, mdlgap, sorte };

std::string to_string(Criterion c);
Criterion criterion_from_string(const std::string& name);

/// Criterion value per candidate source count q, with the argmin estimate.
/// Ties break toward the smallest q. SORTE may hold +inf values.
struct CriterionCurve {
    Criterion name = Criterion::mdl;
    int q_begin = 0;
    std::vector<double> values;
    int argmin_q = 0;

    int q_end() const { return q_begin + static_cast<int>(values.size()) - 1; }
    double at(int q) const { return values.at(static_cast<std::size_t>(q - q_begin)); }
};

/// Classic MDL over the eigenvalue magnitudes:
///   MDL(q) = -(P-q) L log(g_q / a_q) + q (2P-q)/2 log L,  q = 0 .. P-1
/// with g_q, a_q the geometric and arithmetic means of the P-q smallest
/// magnitudes. Magnitudes below 1e-12 |lambda_1| are floored before logs.
CriterionCurve mdl(const EigSpectrum& spectrum);

/// Snapshot-normalized first backward difference of MDL:
///   MDLgap(q) = -log( a_{q-1}^{P-q+1} / (|lambda_q| a_q^{P-q}) )
///               + (P-q+1/2)/L log L,  q = 1 .. P-1
/// computed from log-means directly rather than by differencing two MDL
/// evaluations.
CriterionCurve mdlgap(const EigSpectrum& spectrum);

/// Variance-ratio gap statistic over the eigenvalue-magnitude differences
/// grad_i = |lambda_i| - |lambda_{i+1}|:
///   SORTE(q) = var({grad_i}, i = q+1 .. P-1) / var({grad_i}, i = q .. P-1)
/// with population-normalized variances, +inf when the denominator vanishes,
/// for q = 1 .. P-2. The last candidate's numerator spans a single gap whose
/// variance is identically zero, so it carries the +inf convention as well
/// and the search effectively runs over q <= P-3.
CriterionCurve sorte(const EigSpectrum& spectrum);

/// Large-snapshot limit of MDLgap evaluated on ensemble eigenvalues
/// (no penalty term): h(q) = -log( a_{q-1}^{P-q+1} / (l_q a_q^{P-q}) ).
double h_asymptotic(const std::vector<double>& ensemble_eigs, int q);

/// f(x) = (P - D + x) log( x snr / (P - D + x) + 1 ), the increasing concave
/// comparison function behind the no-underestimation argument.
double f_concave(double x, int p, int d, double snr);

}  // namespace sae
