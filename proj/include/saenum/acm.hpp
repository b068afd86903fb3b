#pragma once

#include <Eigen/Dense>

#include "saenum/spectral.hpp"

namespace sae {

enum class AcmKind { spatial_smoothing, lag_redundancy };

/// P x P augmented covariance built from the coarray correlation vector.
/// The spatial-smoothing kind is Hermitian PSD; the lag-redundancy kind is
/// Hermitian Toeplitz and may have negative eigenvalues.
struct AugmentedCovariance {
    Eigen::MatrixXcd matrix;
    AcmKind kind = AcmKind::lag_redundancy;
    int extent = 0;  // P
};

/// Spatial smoothing: mean outer product of the P sliding length-P
/// subvectors of the length-(2P-1) correlation vector.
AugmentedCovariance ss_acm(const CorrelationVector& r);

/// Lag redundancy averaging: Hermitian Toeplitz with first column
/// [r(0), r(1), ..., r(P-1)].
AugmentedCovariance lra_acm(const CorrelationVector& r);

/// Eigenvalue magnitudes in descending order, paired with the effective
/// snapshot count consumed by the enumeration criteria.
struct EigSpectrum {
    Eigen::VectorXd magnitudes;  // descending
    int effective_snapshots = 0;

    int dim() const { return static_cast<int>(magnitudes.size()); }
};

EigSpectrum eig_magnitudes(const AugmentedCovariance& acm, int effective_snapshots);

}  // namespace sae
