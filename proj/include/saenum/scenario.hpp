#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "saenum/geometry.hpp"

namespace sae {

/// Wideband planewave scene: uncorrelated circular complex Gaussian sources
/// in spatially and temporally white Gaussian noise, observed as frequency
/// domain phasors over M uncorrelated bins.
struct Scenario {
    ArrayGeometry geometry;
    std::vector<double> source_u;      // directional cosines, distinct, in [-1, 1]
    std::vector<double> source_power;  // per-source variance, linear, per bin
    double noise_power = 1.0;          // per-sensor per-bin variance
    std::vector<double> freqs;         // Hz
    double f_center = 0.0;             // Hz; also sets d = c / (2 f_center)
    double prop_speed = 343.0;         // m/s
    int snapshots = 1;

    int source_count() const { return static_cast<int>(source_u.size()); }
    int bin_count() const { return static_cast<int>(freqs.size()); }

    /// Geometry with spacing_m resolved to c/(2 f_center) when unset.
    ArrayGeometry resolved_geometry() const;

    /// Single-bin benchmark scene at f_center carrying the full
    /// time-bandwidth snapshot budget M * L.
    Scenario narrowband_equivalent() const;

    void validate() const;
};

/// Source layout of the underdetermined experiments: 1 source at broadside,
/// 4 uniformly spaced in theta over (90 deg, 135 deg] and 4 uniformly spaced
/// in u over (0, 0.7] (closing endpoints included).
std::vector<double> nine_source_u();

/// Complex frequency-domain phasors indexed (sensor, bin, snapshot).
/// bins[m] is the N x L phasor matrix for frequency freqs[m].
struct SnapshotTensor {
    ArrayGeometry geometry;
    std::vector<double> freqs;
    double f_center = 0.0;
    double prop_speed = 343.0;
    std::vector<Eigen::MatrixXcd> bins;

    int sensor_count() const { return geometry.sensor_count(); }
    int bin_count() const { return static_cast<int>(bins.size()); }
    int snapshot_count() const { return bins.empty() ? 0 : static_cast<int>(bins[0].cols()); }
};

/// Steering vector at frequency f toward directional cosine u:
/// element n is exp(-j 2 pi f (position_n d) u / c). With d = c/(2 f_c)
/// the phase is exactly -pi (f/f_c) position_n u.
Eigen::VectorXcd manifold(const ArrayGeometry& geometry, double f, double u,
                          double prop_speed);

/// Draws s ~ CN(0, diag(source_power)) and n ~ CN(0, noise_power I) per
/// (bin, snapshot) and returns A(f_m) s + n. Bin streams are derived
/// independently from the seed, so bins may be generated in parallel and
/// identical (scenario, seed) pairs reproduce bit-identical tensors.
SnapshotTensor synthesize(const Scenario& scenario, std::uint64_t seed);

}  // namespace sae
