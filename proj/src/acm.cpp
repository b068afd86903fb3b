#include "saenum/acm.hpp"

#include <algorithm>
#include <cmath>

#include "saenum/errors.hpp"

namespace sae {

namespace {

int correlation_extent(const CorrelationVector& r) {
    if (r.half_extent < 1 || r.lag_count() != 2 * r.half_extent - 1)
        throw config_error("correlation vector has inconsistent lag support");
    return r.half_extent;
}

}  // namespace

AugmentedCovariance ss_acm(const CorrelationVector& r) {
    const int p = correlation_extent(r);
    AugmentedCovariance acm;
    acm.kind = AcmKind::spatial_smoothing;
    acm.extent = p;
    acm.matrix = Eigen::MatrixXcd::Zero(p, p);
    // subvector i (1-based) holds entries (P-i+1) .. (2P-i) of r
    for (int i = 1; i <= p; ++i) {
        const Eigen::VectorXcd v = r.values.segment(p - i, p);
        acm.matrix.noalias() += v * v.adjoint();
    }
    acm.matrix /= static_cast<double>(p);
    return acm;
}

AugmentedCovariance lra_acm(const CorrelationVector& r) {
    const int p = correlation_extent(r);
    AugmentedCovariance acm;
    acm.kind = AcmKind::lag_redundancy;
    acm.extent = p;
    acm.matrix.resize(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) acm.matrix(i, j) = r.at(i - j);
    return acm;
}

EigSpectrum eig_magnitudes(const AugmentedCovariance& acm, int effective_snapshots) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(acm.matrix,
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw numerical_error("Hermitian eigendecomposition failed");
    EigSpectrum spec;
    spec.effective_snapshots = effective_snapshots;
    spec.magnitudes = solver.eigenvalues().cwiseAbs();
    std::sort(spec.magnitudes.data(), spec.magnitudes.data() + spec.magnitudes.size(),
              std::greater<double>());
    return spec;
}

}  // namespace sae
