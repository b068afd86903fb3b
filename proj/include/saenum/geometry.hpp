#pragma once

#include <map>
#include <utility>
#include <vector>

namespace sae {

/// Sparse linear array on an integer grid. Positions are multiples of the
/// fundamental spacing d; the physical spacing in meters is attached
/// separately so that coarray arithmetic stays exact on integers.
struct ArrayGeometry {
    std::vector<int> positions;  // strictly increasing, non-negative
    double spacing_m = 0.0;      // fundamental spacing d; 0 = derive from scenario

    int sensor_count() const { return static_cast<int>(positions.size()); }
    int aperture() const { return positions.back() - positions.front(); }

    /// Throws config_error on non-increasing/negative positions or N < 2.
    void validate() const;
};

/// The 6-element minimum redundancy array used throughout the simulations;
/// its difference coarray is hole-free over [-13, 13].
ArrayGeometry mra6(double spacing_m = 0.0);

/// Nested array {1..n1} U {(n1+1)*j : j=1..n2}.
ArrayGeometry nested(int n1, int n2, double spacing_m = 0.0);

/// Coprime array {a*i : i=0..b-1} U {b*j : j=0..2a-1}, deduplicated.
/// Requires gcd(a, b) == 1 and a, b >= 2.
ArrayGeometry coprime(int a, int b, double spacing_m = 0.0);

/// Difference coarray: for each realizable lag k, the ordered sensor-index
/// pairs (n1, n2) with position(n1) - position(n2) == k, their count eta(k),
/// and the contiguous half-extent P (every lag in [1-P, P-1] is realized).
struct Coarray {
    std::map<int, std::vector<std::pair<int, int>>> lag_pairs;
    int contiguous_p = 0;

    int weight(int k) const {
        auto it = lag_pairs.find(k);
        return it == lag_pairs.end() ? 0 : static_cast<int>(it->second.size());
    }
    const std::vector<std::pair<int, int>>& pairs_at(int k) const;
};

Coarray difference_coarray(const ArrayGeometry& geometry);

}  // namespace sae
