#include "saenum/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "saenum/errors.hpp"

namespace sae {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Floored log-magnitudes plus plain magnitudes, shared by mdl and mdlgap.
struct FlooredSpectrum {
    std::vector<double> mag;      // descending, floored
    std::vector<double> tail_sum;  // tail_sum[q] = sum of mag[q..P-1]
    std::vector<double> tail_log;  // tail_log[q] = sum of log mag[q..P-1]
    int p = 0;
    double l = 0.0;
};

FlooredSpectrum prepare(const EigSpectrum& spectrum) {
    FlooredSpectrum f;
    f.p = spectrum.dim();
    f.l = static_cast<double>(spectrum.effective_snapshots);
    if (f.p < 2) throw config_error("criterion needs at least 2 eigenvalues");
    if (spectrum.effective_snapshots < 1)
        throw config_error("criterion needs effective_snapshots >= 1");
    const double top = spectrum.magnitudes(0);
    if (top <= 0.0) throw config_error("all-zero eigenvalue spectrum");
    const double floor = 1e-12 * top;
    f.mag.resize(f.p);
    for (int i = 0; i < f.p; ++i) f.mag[i] = std::max(spectrum.magnitudes(i), floor);
    f.tail_sum.assign(f.p + 1, 0.0);
    f.tail_log.assign(f.p + 1, 0.0);
    for (int q = f.p - 1; q >= 0; --q) {
        f.tail_sum[q] = f.tail_sum[q + 1] + f.mag[q];
        f.tail_log[q] = f.tail_log[q + 1] + std::log(f.mag[q]);
    }
    return f;
}

int argmin_index(const std::vector<double>& values) {
    return static_cast<int>(std::min_element(values.begin(), values.end()) -
                            values.begin());
}

}  // namespace

std::string to_string(Criterion c) {
    switch (c) {
        case Criterion::mdl: return "mdl";
        case Criterion::mdlgap: return "mdlgap";
        case Criterion::sorte: return "sorte";
    }
    return "?";
}

Criterion criterion_from_string(const std::string& name) {
    if (name == "mdl") return Criterion::mdl;
    if (name == "mdlgap") return Criterion::mdlgap;
    if (name == "sorte") return Criterion::sorte;
    throw config_error("unknown criterion: " + name);
}

CriterionCurve mdl(const EigSpectrum& spectrum) {
    const FlooredSpectrum f = prepare(spectrum);
    CriterionCurve curve;
    curve.name = Criterion::mdl;
    curve.q_begin = 0;
    curve.values.reserve(f.p);
    for (int q = 0; q < f.p; ++q) {
        const double count = f.p - q;
        const double log_g = f.tail_log[q] / count;
        const double log_a = std::log(f.tail_sum[q] / count);
        const double likelihood = -count * f.l * (log_g - log_a);
        const double penalty = 0.5 * q * (2.0 * f.p - q) * std::log(f.l);
        curve.values.push_back(likelihood + penalty);
    }
    curve.argmin_q = argmin_index(curve.values);
    return curve;
}

CriterionCurve mdlgap(const EigSpectrum& spectrum) {
    const FlooredSpectrum f = prepare(spectrum);
    CriterionCurve curve;
    curve.name = Criterion::mdlgap;
    curve.q_begin = 1;
    curve.values.reserve(f.p - 1);
    for (int q = 1; q < f.p; ++q) {
        const double log_a_prev = std::log(f.tail_sum[q - 1] / (f.p - q + 1));
        const double log_a = std::log(f.tail_sum[q] / (f.p - q));
        const double log_lambda_q = std::log(f.mag[q - 1]);
        const double gap =
            -((f.p - q + 1) * log_a_prev - log_lambda_q - (f.p - q) * log_a);
        const double penalty = (f.p - q + 0.5) / f.l * std::log(f.l);
        curve.values.push_back(gap + penalty);
    }
    curve.argmin_q = 1 + argmin_index(curve.values);
    return curve;
}

CriterionCurve sorte(const EigSpectrum& spectrum) {
    const int p = spectrum.dim();
    if (p < 4) throw config_error("SORTE needs at least 4 eigenvalues");
    std::vector<double> gap(p - 1);
    for (int i = 0; i < p - 1; ++i)
        gap[i] = spectrum.magnitudes(i) - spectrum.magnitudes(i + 1);

    // population variance of gap[first..p-2]
    auto tail_var = [&](int first) {
        const int count = p - 1 - first;
        double mean = 0.0;
        for (int i = first; i < p - 1; ++i) mean += gap[i];
        mean /= count;
        double var = 0.0;
        for (int i = first; i < p - 1; ++i) var += (gap[i] - mean) * (gap[i] - mean);
        return var / count;
    };

    CriterionCurve curve;
    curve.name = Criterion::sorte;
    curve.q_begin = 1;
    curve.values.reserve(p - 2);
    for (int q = 1; q <= p - 2; ++q) {
        if (q == p - 2) {
            curve.values.push_back(kInf);  // single-gap numerator, degenerate
            continue;
        }
        const double den = tail_var(q - 1);
        curve.values.push_back(den == 0.0 ? kInf : tail_var(q) / den);
    }
    curve.argmin_q = 1 + argmin_index(curve.values);
    return curve;
}

double h_asymptotic(const std::vector<double>& ensemble_eigs, int q) {
    const int p = static_cast<int>(ensemble_eigs.size());
    if (q < 1 || q > p - 1) throw config_error("h(q) needs 1 <= q <= P-1");
    for (std::size_t i = 1; i < ensemble_eigs.size(); ++i)
        if (ensemble_eigs[i] > ensemble_eigs[i - 1])
            throw config_error("ensemble eigenvalues must be non-increasing");
    if (ensemble_eigs.back() <= 0.0)
        throw config_error("ensemble eigenvalues must be positive");
    double sum_a = 0.0, sum_a_prev = 0.0;
    for (int i = q; i < p; ++i) sum_a += ensemble_eigs[i];
    sum_a_prev = sum_a + ensemble_eigs[q - 1];
    const double log_a = std::log(sum_a / (p - q));
    const double log_a_prev = std::log(sum_a_prev / (p - q + 1));
    return -((p - q + 1) * log_a_prev - std::log(ensemble_eigs[q - 1]) -
             (p - q) * log_a);
}

double f_concave(double x, int p, int d, double snr) {
    if (x < 0.0) throw config_error("f(x) is defined for x >= 0");
    if (p <= d) throw config_error("f(x) needs P > D");
    if (snr <= 0.0) throw config_error("f(x) needs positive SNR");
    const double denom = p - d + x;
    return denom * std::log(x * snr / denom + 1.0);
}

}  // namespace sae
