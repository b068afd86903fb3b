#pragma once

#include <Eigen/Dense>

#include "saenum/geometry.hpp"
#include "saenum/scenario.hpp"

namespace sae {

/// Snapshot-averaged outer product for one frequency bin (Hermitian PSD).
struct SampleCovariance {
    Eigen::MatrixXcd matrix;
    int snapshot_count = 0;
    double freq = 0.0;
};

/// Spatial power on the uniform directional-cosine grid u_g = -1 + 2g/Ng.
struct Periodogram {
    Eigen::VectorXd u;
    Eigen::VectorXd value;

    int grid_size() const { return static_cast<int>(u.size()); }
};

/// Coarray-lag correlation sequence r(k), k = -(P-1) .. P-1, stored with
/// conjugate symmetry r(-k) == conj(r(k)).
struct CorrelationVector {
    int half_extent = 0;  // P
    Eigen::VectorXcd values;  // index p <-> lag p - (P-1)

    std::complex<double> at(int lag) const { return values(lag + half_extent - 1); }
    std::complex<double>& at(int lag) { return values(lag + half_extent - 1); }
    int lag_count() const { return static_cast<int>(values.size()); }
};

Eigen::VectorXd make_u_grid(int grid_size);

SampleCovariance scm(const SnapshotTensor& snapshots, int bin);

/// Averages SCM entries over the pair set of each contiguous lag (Eq. for
/// the redundancy-averaged coarray correlation).
CorrelationVector coarray_correlation(const SampleCovariance& scm, const Coarray& coarray);

/// Conventional-beamformer power averaged over snapshots, evaluated with
/// unnormalized steering vectors so that t(u) = sum_k eta(k) r(k) e^{j pi k u}
/// at the design frequency.
Periodogram narrowband_periodogram(const SnapshotTensor& snapshots, int bin,
                                   int grid_size = 256);

/// Pointwise mean of the per-bin periodograms.
Periodogram wideband_periodogram(const SnapshotTensor& snapshots, int grid_size = 256);

/// Inverse spatial Fourier transform of the periodogram, normalized by the
/// coarray weights. Exact on the uniform grid whenever grid_size covers the
/// realized lags (grid_size >= 2P-1 enforced, which is exact for hole-free
/// coarrays such as the MRA's).
CorrelationVector correlation_from_periodogram(const Periodogram& periodogram,
                                               const Coarray& coarray);

}  // namespace sae
