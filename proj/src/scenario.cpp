#include "saenum/scenario.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "saenum/errors.hpp"
#include "saenum/rng.hpp"

namespace sae {

using std::numbers::pi;

ArrayGeometry Scenario::resolved_geometry() const {
    ArrayGeometry g = geometry;
    if (g.spacing_m <= 0.0) g.spacing_m = prop_speed / (2.0 * f_center);
    return g;
}

Scenario Scenario::narrowband_equivalent() const {
    Scenario nb = *this;
    nb.freqs = {f_center};
    nb.snapshots = bin_count() * snapshots;
    return nb;
}

void Scenario::validate() const {
    geometry.validate();
    if (source_u.empty()) throw config_error("scenario needs at least one source");
    if (source_u.size() != source_power.size())
        throw config_error("source_u and source_power size mismatch");
    std::set<double> seen;
    for (double u : source_u) {
        if (std::abs(u) > 1.0) throw config_error("directional cosine outside [-1, 1]");
        if (!seen.insert(u).second) throw config_error("duplicate source directions");
    }
    for (double p : source_power)
        if (p <= 0.0) throw config_error("source power must be positive");
    if (noise_power <= 0.0) throw config_error("noise power must be positive");
    if (freqs.empty()) throw config_error("scenario needs at least one frequency bin");
    for (double f : freqs)
        if (f <= 0.0) throw config_error("frequencies must be positive");
    if (f_center <= 0.0) throw config_error("center frequency must be positive");
    if (prop_speed <= 0.0) throw config_error("propagation speed must be positive");
    if (snapshots < 1) throw config_error("snapshot count must be >= 1");
}

std::vector<double> nine_source_u() {
    std::vector<double> u{0.0};
    for (int i = 1; i <= 4; ++i) {
        const double theta = 90.0 + 45.0 * i / 4.0;
        u.push_back(std::cos(theta * pi / 180.0));
    }
    for (int i = 1; i <= 4; ++i) u.push_back(0.7 * i / 4.0);
    return u;
}

Eigen::VectorXcd manifold(const ArrayGeometry& geometry, double f, double u,
                          double prop_speed) {
    if (std::abs(u) > 1.0) throw config_error("directional cosine outside [-1, 1]");
    if (f <= 0.0 || geometry.spacing_m <= 0.0 || prop_speed <= 0.0)
        throw config_error("manifold needs positive f, spacing and speed");
    const int n = geometry.sensor_count();
    Eigen::VectorXcd v(n);
    const double scale = 2.0 * pi * f * geometry.spacing_m / prop_speed;
    for (int i = 0; i < n; ++i)
        v(i) = std::polar(1.0, -scale * geometry.positions[i] * u);
    return v;
}

SnapshotTensor synthesize(const Scenario& scenario, std::uint64_t seed) {
    scenario.validate();
    const ArrayGeometry geometry = scenario.resolved_geometry();
    const int n = geometry.sensor_count();
    const int d = scenario.source_count();
    const int l = scenario.snapshots;

    SnapshotTensor tensor;
    tensor.geometry = geometry;
    tensor.freqs = scenario.freqs;
    tensor.f_center = scenario.f_center;
    tensor.prop_speed = scenario.prop_speed;
    tensor.bins.reserve(scenario.freqs.size());

    for (std::size_t m = 0; m < scenario.freqs.size(); ++m) {
        Eigen::MatrixXcd a(n, d);
        for (int i = 0; i < d; ++i)
            a.col(i) = manifold(geometry, scenario.freqs[m], scenario.source_u[i],
                                scenario.prop_speed);

        Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(m)}));
        Eigen::MatrixXcd x(n, l);
        Eigen::VectorXcd s(d);
        for (int snap = 0; snap < l; ++snap) {
            for (int i = 0; i < d; ++i)
                s(i) = rng.complex_normal(scenario.source_power[i]);
            x.col(snap) = a * s;
            for (int sensor = 0; sensor < n; ++sensor)
                x(sensor, snap) += rng.complex_normal(scenario.noise_power);
        }
        tensor.bins.push_back(std::move(x));
    }
    return tensor;
}

}  // namespace sae
