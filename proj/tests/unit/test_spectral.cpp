#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "saenum/errors.hpp"
#include "saenum/spectral.hpp"

using namespace sae;
using std::numbers::pi;
using cplx = std::complex<double>;

namespace {

SnapshotTensor random_tensor(int bins, int snapshots, std::uint64_t seed,
                             double f_center = 100.0) {
    Scenario s;
    s.geometry = mra6();
    s.source_u = {-0.4, 0.1, 0.55};
    s.source_power = {2.0, 1.0, 0.5};
    s.noise_power = 1.0;
    if (bins == 1) {
        s.freqs = {f_center};
    } else {
        for (int i = 0; i < bins; ++i)
            s.freqs.push_back(80.0 + 40.0 * i / (bins - 1));
    }
    s.f_center = f_center;
    s.snapshots = snapshots;
    return synthesize(s, seed);
}

// steers every bin toward a fixed phasor so periodogram values are exact
SnapshotTensor constant_tensor(const Eigen::VectorXcd& column, int bins, int snapshots) {
    SnapshotTensor t;
    t.geometry = mra6();
    t.geometry.spacing_m = 343.0 / 200.0;
    t.f_center = 100.0;
    t.prop_speed = 343.0;
    for (int m = 0; m < bins; ++m) {
        t.freqs.push_back(100.0);
        t.bins.push_back(column.replicate(1, snapshots));
    }
    return t;
}

}  // namespace

TEST_CASE("scm of a single snapshot is the rank-one outer product") {
    const SnapshotTensor t = random_tensor(1, 1, 11);
    const SampleCovariance r = scm(t, 0);
    const Eigen::MatrixXcd expected = t.bins[0].col(0) * t.bins[0].col(0).adjoint();
    CHECK((r.matrix - expected).norm() < 1e-12 * expected.norm());
    CHECK(r.snapshot_count == 1);
}

TEST_CASE("scm is Hermitian PSD with trace equal to mean snapshot energy") {
    const SnapshotTensor t = random_tensor(1, 37, 12);
    const SampleCovariance r = scm(t, 0);
    CHECK((r.matrix - r.matrix.adjoint()).norm() < 1e-13 * r.matrix.norm());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(r.matrix);
    CHECK(eig.eigenvalues().minCoeff() > -1e-12 * r.matrix.trace().real());
    double energy = 0.0;
    for (int l = 0; l < 37; ++l) energy += t.bins[0].col(l).squaredNorm();
    CHECK(r.matrix.trace().real() == doctest::Approx(energy / 37).epsilon(1e-12));
}

TEST_CASE("coarray correlation of the identity covariance is a unit impulse") {
    SampleCovariance r;
    r.matrix = Eigen::MatrixXcd::Identity(6, 6);
    r.snapshot_count = 1;
    const Coarray ca = difference_coarray(mra6());
    const CorrelationVector c = coarray_correlation(r, ca);
    CHECK(c.half_extent == 14);
    CHECK(c.at(0).real() == doctest::Approx(1.0));
    for (int k = 1; k <= 13; ++k) {
        CHECK(std::abs(c.at(k)) < 1e-15);
        CHECK(std::abs(c.at(-k)) < 1e-15);
    }
}

TEST_CASE("coarray correlation of the one-source ensemble covariance") {
    // R = sigma^2 v v^H + noise I with v the manifold at fc: every pair at lag
    // k shares the phase exp(-j pi k u), so r(k) = sigma^2 exp(-j pi k u) + noise delta(k)
    const double sigma2 = 2.5, noise = 0.7, u = 0.37;
    ArrayGeometry g = mra6();
    g.spacing_m = 343.0 / 200.0;
    const Eigen::VectorXcd v = manifold(g, 100.0, u, 343.0);
    SampleCovariance r;
    r.matrix = sigma2 * v * v.adjoint() + noise * Eigen::MatrixXcd::Identity(6, 6);
    const Coarray ca = difference_coarray(g);
    const CorrelationVector c = coarray_correlation(r, ca);
    for (int k = -13; k <= 13; ++k) {
        const cplx expected =
            sigma2 * std::polar(1.0, -pi * k * u) + (k == 0 ? noise : 0.0);
        CHECK(std::abs(c.at(k) - expected) < 1e-12);
    }
    // conjugate symmetry comes with the Hermitian covariance
    for (int k = 1; k <= 13; ++k)
        CHECK(std::abs(c.at(-k) - std::conj(c.at(k))) < 1e-15);
}

TEST_CASE("lag 13 takes the single outermost pair without averaging") {
    const SnapshotTensor t = random_tensor(1, 9, 13);
    const SampleCovariance r = scm(t, 0);
    const Coarray ca = difference_coarray(mra6());
    const CorrelationVector c = coarray_correlation(r, ca);
    CHECK(std::abs(c.at(13) - r.matrix(5, 0)) < 1e-15);
}

TEST_CASE("periodogram of a pure steering-vector snapshot peaks at N^2") {
    ArrayGeometry g = mra6();
    g.spacing_m = 343.0 / 200.0;
    const Eigen::VectorXcd v = manifold(g, 100.0, 0.0, 343.0);  // broadside
    const SnapshotTensor t = constant_tensor(v, 1, 3);
    const Periodogram p = narrowband_periodogram(t, 0, 256);
    // u = 0 sits exactly on the grid at index Ng/2
    CHECK(p.u(128) == doctest::Approx(0.0));
    CHECK(p.value(128) == doctest::Approx(36.0).epsilon(1e-12));
    int argmax = 0;
    p.value.maxCoeff(&argmax);
    CHECK(argmax == 128);
}

TEST_CASE("periodogram values are non-negative for any input") {
    const SnapshotTensor t = random_tensor(3, 5, 21);
    for (int m = 0; m < 3; ++m) {
        const Periodogram p = narrowband_periodogram(t, m, 64);
        CHECK(p.value.minCoeff() >= 0.0);
    }
}

TEST_CASE("snapshot-averaged beamformer power equals the SCM bilinear form") {
    const SnapshotTensor t = random_tensor(2, 17, 31);
    const Coarray ca = difference_coarray(t.geometry);
    for (int m = 0; m < 2; ++m) {
        const Periodogram p = narrowband_periodogram(t, m, 64);
        const SampleCovariance r = scm(t, m);
        ArrayGeometry g = t.geometry;
        g.spacing_m = t.prop_speed / (2.0 * t.f_center);
        for (int gi = 0; gi < 64; ++gi) {
            const Eigen::VectorXcd w = manifold(g, t.freqs[m], p.u(gi), t.prop_speed);
            const double direct = (w.adjoint() * r.matrix * w).real()(0);
            CHECK(p.value(gi) == doctest::Approx(direct).epsilon(1e-10));
        }
    }
}

TEST_CASE("wideband periodogram degenerates to the narrowband one at M=1") {
    const SnapshotTensor t = random_tensor(1, 8, 41);
    const Periodogram wide = wideband_periodogram(t, 128);
    const Periodogram narrow = narrowband_periodogram(t, 0, 128);
    CHECK((wide.value - narrow.value).norm() < 1e-14 * narrow.value.norm());
}

TEST_CASE("wideband periodogram of two identical bins equals either bin") {
    SnapshotTensor t = random_tensor(1, 8, 43);
    t.freqs.push_back(t.freqs[0]);
    t.bins.push_back(t.bins[0]);
    const Periodogram wide = wideband_periodogram(t, 128);
    const Periodogram narrow = narrowband_periodogram(t, 0, 128);
    CHECK((wide.value - narrow.value).norm() < 1e-14 * narrow.value.norm());
}

TEST_CASE("flat periodogram inverts to a DC-only correlation") {
    const Coarray ca = difference_coarray(mra6());
    Periodogram p;
    p.u = make_u_grid(64);
    p.value = Eigen::VectorXd::Constant(64, 3.5);
    const CorrelationVector c = correlation_from_periodogram(p, ca);
    CHECK(c.at(0).real() == doctest::Approx(3.5 / 6.0));
    for (int k = 1; k <= 13; ++k) CHECK(std::abs(c.at(k)) < 1e-14);
}

TEST_CASE("narrowband oracle: periodogram path equals the direct SCM path") {
    // at M=1, f=fc the periodogram is a trigonometric polynomial of degree
    // P-1, so the inverse transform on any grid of >= 2P-1 points is exact
    const Coarray ca = difference_coarray(mra6());
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const SnapshotTensor t = random_tensor(1, 3 + int(seed % 7), 100 + seed);
        const CorrelationVector direct = coarray_correlation(scm(t, 0), ca);
        for (int ng : {27, 64, 256}) {
            const Periodogram p = wideband_periodogram(t, ng);
            const CorrelationVector recovered = correlation_from_periodogram(p, ca);
            const double err = (recovered.values - direct.values).norm() /
                               direct.values.norm();
            CHECK(err < 1e-10);
        }
    }
}

TEST_CASE("recovered correlation keeps conjugate symmetry and real DC") {
    const SnapshotTensor t = random_tensor(5, 4, 55);
    const Coarray ca = difference_coarray(t.geometry);
    const Periodogram p = wideband_periodogram(t, 256);
    const CorrelationVector c = correlation_from_periodogram(p, ca);
    for (int k = 1; k <= 13; ++k)
        CHECK(std::abs(c.at(-k) - std::conj(c.at(k))) < 1e-15);
    CHECK(c.at(0).imag() == 0.0);
    // Parseval-style check: r(0) = mean(t) / N
    CHECK(c.at(0).real() == doctest::Approx(p.value.mean() / 6.0).epsilon(1e-12));
}

TEST_CASE("grid below 2P-1 points is rejected") {
    const Coarray ca = difference_coarray(mra6());
    Periodogram p;
    p.u = make_u_grid(26);
    p.value = Eigen::VectorXd::Ones(26);
    CHECK_THROWS_AS(correlation_from_periodogram(p, ca), config_error);
}
