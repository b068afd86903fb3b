#include "saenum/spectral.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "saenum/errors.hpp"

namespace sae {

using std::numbers::pi;

Eigen::VectorXd make_u_grid(int grid_size) {
    if (grid_size < 2) throw config_error("u-grid needs at least 2 points");
    Eigen::VectorXd u(grid_size);
    for (int g = 0; g < grid_size; ++g) u(g) = -1.0 + 2.0 * g / grid_size;
    return u;
}

SampleCovariance scm(const SnapshotTensor& snapshots, int bin) {
    if (bin < 0 || bin >= snapshots.bin_count()) throw config_error("bin index out of range");
    const Eigen::MatrixXcd& x = snapshots.bins[bin];
    SampleCovariance out;
    out.snapshot_count = static_cast<int>(x.cols());
    out.freq = snapshots.freqs[bin];
    out.matrix = (x * x.adjoint()) / static_cast<double>(x.cols());
    // force exact Hermitian symmetry against rounding drift
    out.matrix = 0.5 * (out.matrix + out.matrix.adjoint()).eval();
    return out;
}

CorrelationVector coarray_correlation(const SampleCovariance& scm, const Coarray& coarray) {
    const int p = coarray.contiguous_p;
    CorrelationVector r;
    r.half_extent = p;
    r.values.resize(2 * p - 1);
    for (int k = -(p - 1); k <= p - 1; ++k) {
        const auto& pairs = coarray.pairs_at(k);
        if (pairs.empty()) throw numerical_error("empty pair set inside contiguous coarray");
        std::complex<double> acc = 0.0;
        for (const auto& [n1, n2] : pairs) acc += scm.matrix(n1, n2);
        r.at(k) = acc / static_cast<double>(pairs.size());
    }
    return r;
}

namespace {

Eigen::MatrixXcd steering_table(const SnapshotTensor& snapshots, int bin,
                                const Eigen::VectorXd& u) {
    ArrayGeometry geometry = snapshots.geometry;
    if (geometry.spacing_m <= 0.0)
        geometry.spacing_m = snapshots.prop_speed / (2.0 * snapshots.f_center);
    Eigen::MatrixXcd w(geometry.sensor_count(), u.size());
    for (int g = 0; g < u.size(); ++g)
        w.col(g) = manifold(geometry, snapshots.freqs[bin], u(g), snapshots.prop_speed);
    return w;
}

void clamp_floor(Eigen::VectorXd& value) {
    const double floor = -1e-12 * std::max(value.maxCoeff(), 0.0);
    for (int g = 0; g < value.size(); ++g) {
        if (value(g) < floor)
            throw numerical_error("periodogram went negative beyond rounding");
        if (value(g) < 0.0) value(g) = 0.0;
    }
}

}  // namespace

Periodogram narrowband_periodogram(const SnapshotTensor& snapshots, int bin, int grid_size) {
    if (bin < 0 || bin >= snapshots.bin_count()) throw config_error("bin index out of range");
    Periodogram t;
    t.u = make_u_grid(grid_size);
    const Eigen::MatrixXcd w = steering_table(snapshots, bin, t.u);
    const Eigen::MatrixXcd& x = snapshots.bins[bin];
    // (1/L) sum_l |w^H x_l|^2, all steering directions at once
    t.value = (w.adjoint() * x).cwiseAbs2().rowwise().mean();
    clamp_floor(t.value);
    return t;
}

Periodogram wideband_periodogram(const SnapshotTensor& snapshots, int grid_size) {
    if (snapshots.bin_count() < 1) throw config_error("tensor has no frequency bins");
    Periodogram t;
    t.u = make_u_grid(grid_size);
    t.value = Eigen::VectorXd::Zero(grid_size);
    for (int m = 0; m < snapshots.bin_count(); ++m)
        t.value += narrowband_periodogram(snapshots, m, grid_size).value;
    t.value /= static_cast<double>(snapshots.bin_count());
    return t;
}

CorrelationVector correlation_from_periodogram(const Periodogram& periodogram,
                                               const Coarray& coarray) {
    const int p = coarray.contiguous_p;
    const int ng = periodogram.grid_size();
    if (ng < 2 * p - 1)
        throw config_error("u-grid too coarse: need at least 2P-1 points");
    CorrelationVector r;
    r.half_extent = p;
    r.values.resize(2 * p - 1);
    // one-sided transform; negative lags follow from conjugate symmetry of
    // the real periodogram
    for (int k = 0; k <= p - 1; ++k) {
        std::complex<double> acc = 0.0;
        for (int g = 0; g < ng; ++g)
            acc += periodogram.value(g) * std::polar(1.0, -pi * k * periodogram.u(g));
        const std::complex<double> rk = acc / (static_cast<double>(ng) * coarray.weight(k));
        r.at(k) = rk;
        r.at(-k) = std::conj(rk);
    }
    r.at(0) = r.at(0).real();
    return r;
}

}  // namespace sae
