#include "saenum/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "saenum/errors.hpp"

namespace sae {

void ArrayGeometry::validate() const {
    if (positions.size() < 2) throw config_error("array needs at least 2 sensors");
    if (positions.front() < 0) throw config_error("sensor positions must be non-negative");
    for (std::size_t i = 1; i < positions.size(); ++i) {
        if (positions[i] <= positions[i - 1])
            throw config_error("sensor positions must be strictly increasing");
    }
    if (spacing_m < 0.0) throw config_error("fundamental spacing must be positive");
}

ArrayGeometry mra6(double spacing_m) {
    return ArrayGeometry{{1, 2, 5, 6, 12, 14}, spacing_m};
}

ArrayGeometry nested(int n1, int n2, double spacing_m) {
    if (n1 < 1 || n2 < 1) throw config_error("nested array needs n1, n2 >= 1");
    std::set<int> pos;
    for (int i = 1; i <= n1; ++i) pos.insert(i);
    for (int j = 1; j <= n2; ++j) pos.insert((n1 + 1) * j);
    return ArrayGeometry{{pos.begin(), pos.end()}, spacing_m};
}

ArrayGeometry coprime(int a, int b, double spacing_m) {
    if (a < 2 || b < 2) throw config_error("coprime array needs a, b >= 2");
    if (std::gcd(a, b) != 1) throw config_error("coprime array needs gcd(a, b) == 1");
    std::set<int> pos;
    for (int i = 0; i < b; ++i) pos.insert(a * i);
    for (int j = 0; j < 2 * a; ++j) pos.insert(b * j);
    return ArrayGeometry{{pos.begin(), pos.end()}, spacing_m};
}

const std::vector<std::pair<int, int>>& Coarray::pairs_at(int k) const {
    auto it = lag_pairs.find(k);
    if (it == lag_pairs.end())
        throw config_error("lag " + std::to_string(k) + " not realized by this geometry");
    return it->second;
}

Coarray difference_coarray(const ArrayGeometry& geometry) {
    geometry.validate();
    Coarray ca;
    const int n = geometry.sensor_count();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int k = geometry.positions[i] - geometry.positions[j];
            ca.lag_pairs[k].emplace_back(i, j);
        }
    }
    // largest P with every lag in [1-P, P-1] realized; lag 0 always is
    int p = 1;
    while (ca.weight(p) > 0) ++p;
    ca.contiguous_p = p;
    return ca;
}

}  // namespace sae
