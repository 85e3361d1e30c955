#include "volcd/volatility_filter.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace volcd {

VolatilityFilter::VolatilityFilter(WeightVector weights) : weights_(std::move(weights)) {
    if (weights_.size() < 2) throw std::invalid_argument("volatility window must be >= 2 samples");
    for (double w : weights_.coeffs) {
        if (!(w > 0.0)) throw std::invalid_argument("volatility weights must be strictly positive");
    }
    squares_.assign(weights_.size(), 0.0);
}

std::optional<double> VolatilityFilter::push(double x) {
    if (!std::isfinite(x)) throw std::domain_error("non-finite sample");
    squares_[head_] = x * x;
    head_ = (head_ + 1) % squares_.size();
    if (count_ < squares_.size()) ++count_;
    if (!warm()) return std::nullopt;
    const double v = dot();
    assert(v >= 0.0);
    last_ = std::sqrt(v);
    return last_;
}

std::optional<double> VolatilityFilter::value() const {
    if (!warm()) return std::nullopt;
    return last_;
}

double VolatilityFilter::dot() const {
    // Full recomputation each step; windows are small and this avoids the
    // drift of incremental sum updates.
    const std::size_t n = squares_.size();
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t idx = (head_ + n - 1 - k) % n;  // k-th newest
        acc += weights_[k] * squares_[idx];
    }
    return acc;
}

std::optional<double> differenced_output(std::span<const double> sigma_history, int lag) {
    if (lag < 1) throw std::invalid_argument("difference lag must be >= 1");
    if (sigma_history.size() < static_cast<std::size_t>(lag) + 1) return std::nullopt;
    const std::size_t n = sigma_history.size();
    return sigma_history[n - 1] - sigma_history[n - 1 - static_cast<std::size_t>(lag)];
}

DifferencedVolatility::DifferencedVolatility(int lag_window)
    : lag_(lag_window), filter_(make_uniform_weights(lag_window)) {
    history_.assign(static_cast<std::size_t>(lag_) + 1, 0.0);
}

std::optional<double> DifferencedVolatility::push(double x) {
    const auto sigma = filter_.push(x);
    if (!sigma) return std::nullopt;
    history_[hist_head_] = *sigma;
    hist_head_ = (hist_head_ + 1) % history_.size();
    if (hist_count_ < history_.size()) ++hist_count_;
    if (hist_count_ < history_.size()) return std::nullopt;
    // newest is hist_head_-1, the lagged value sits at hist_head_ (oldest).
    const std::size_t newest = (hist_head_ + history_.size() - 1) % history_.size();
    return history_[newest] - history_[hist_head_ % history_.size()];
}

}  // namespace volcd
