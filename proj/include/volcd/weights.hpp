#pragma once

#include <cstddef>
#include <vector>

namespace volcd {

enum class WeightScheme { triangular, uniform };

/// FIR weights for a volatility filter. Index 0 applies to the newest sample.
struct WeightVector {
    std::vector<double> coeffs;

    std::size_t size() const { return coeffs.size(); }
    double operator[](std::size_t i) const { return coeffs[i]; }
    double sum() const;
};

/// Square-window weights, each coefficient 1/(T-1). The sum is T/(T-1),
/// the sliding-window convention for an unbiased variance estimate.
WeightVector make_uniform_weights(int window);

/// Triangular weights rising toward the oldest sample: k-th newest gets
/// k / (T(T+1)/2). Sums to 1.
WeightVector make_triangular_slow_weights(int window);

/// Triangular weights concentrated on the newest samples: k-th newest gets
/// (T-k+1) / (T(T+1)/2). Elementwise reversal of the slow triangle.
WeightVector make_triangular_fast_weights(int window);

WeightVector make_fast_weights(WeightScheme scheme, int window);
WeightVector make_slow_weights(WeightScheme scheme, int window);

}  // namespace volcd
