#pragma once

#include <optional>
#include <span>
#include <vector>

#include "volcd/weights.hpp"

namespace volcd {

/// Windowed FIR filter over squared samples; output is the square root of
/// the weighted sum, an instantaneous standard-deviation estimate.
///
/// Outputs are undefined until the window has filled (warm-up); push returns
/// std::nullopt in that regime. A non-finite input throws std::domain_error
/// and leaves the state untouched.
class VolatilityFilter {
public:
    explicit VolatilityFilter(WeightVector weights);

    std::optional<double> push(double x);

    bool warm() const { return count_ >= squares_.size(); }
    std::size_t window() const { return squares_.size(); }
    std::optional<double> value() const;
    const WeightVector& weights() const { return weights_; }

private:
    double dot() const;

    WeightVector weights_;
    std::vector<double> squares_;  // ring buffer of x^2
    std::size_t head_ = 0;         // next write slot
    std::size_t count_ = 0;
    double last_ = 0.0;
};

/// sigma_D(t) = sigma_l(t) - sigma_l(t - lag) over a history of filter
/// outputs (newest last). Needs lag+1 entries.
std::optional<double> differenced_output(std::span<const double> sigma_history, int lag);

/// Streaming form: uniform-window volatility filter plus the lagged
/// difference of its output.
class DifferencedVolatility {
public:
    explicit DifferencedVolatility(int lag_window);

    /// Feed one raw sample; returns sigma_D once both filter outputs exist.
    std::optional<double> push(double x);

    int lag() const { return lag_; }

private:
    int lag_;
    VolatilityFilter filter_;
    std::vector<double> history_;  // ring of lag+1 sigma values
    std::size_t hist_head_ = 0;
    std::size_t hist_count_ = 0;
};

}  // namespace volcd
