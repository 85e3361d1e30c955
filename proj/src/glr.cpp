#include "volcd/glr.hpp"

#include <cmath>
#include <stdexcept>

namespace volcd {

void GlrConfig::validate() const {
    if (window < 4) throw std::invalid_argument("GLR window must be >= 4");
    if (!(threshold > 0.0)) throw std::invalid_argument("GLR threshold must be positive");
}

double glr_statistic(std::span<const double> window, int split) {
    if (window.size() < 8 || window.size() % 2 != 0)
        throw std::invalid_argument("GLR window must hold 2L samples, L >= 4");
    const int two_l = static_cast<int>(window.size());
    const int l = two_l / 2;
    if (split < l / 2 || split > two_l - l / 2)
        throw std::invalid_argument("split outside the admissible range");
    double s1 = 0.0, s2 = 0.0;
    for (int i = 0; i < split; ++i) s1 += window[static_cast<std::size_t>(i)] * window[static_cast<std::size_t>(i)];
    for (int i = split; i < two_l; ++i) s2 += window[static_cast<std::size_t>(i)] * window[static_cast<std::size_t>(i)];
    if (s1 <= 0.0 || s2 <= 0.0) throw std::domain_error("zero variance on one side of the split");
    const double n1 = split;
    const double n2 = two_l - split;
    const double s0 = s1 + s2;
    return 0.5 * (two_l * std::log(s0 / two_l) - n1 * std::log(s1 / n1) - n2 * std::log(s2 / n2));
}

GlrDetector::GlrDetector(GlrConfig config, int channel) : config_(config), channel_(channel) {
    config_.validate();
    squares_.assign(static_cast<std::size_t>(2 * config_.window), 0.0);
}

GlrStep GlrDetector::step(double x) {
    if (!std::isfinite(x)) throw std::domain_error("non-finite sample");
    squares_[head_] = x * x;
    head_ = (head_ + 1) % squares_.size();
    if (count_ < squares_.size()) ++count_;
    const std::int64_t t = arrivals_++;
    if (count_ < squares_.size()) return GlrStep{t, false, false, 0.0, std::nullopt};
    if (refractory_remaining_ > 0) {
        --refractory_remaining_;
        return GlrStep{t, true, false, 0.0, std::nullopt};
    }

    // One pass over the window in time order, accumulating the left-side
    // energy at each split.
    const int two_l = static_cast<int>(squares_.size());
    double total = 0.0;
    for (double v : squares_) total += v;
    if (total <= 0.0) return GlrStep{t, true, false, 0.0, std::nullopt};

    const int lo = config_.min_split();
    const int hi = config_.max_split();
    double left = 0.0;
    double best = -1.0;
    int best_split = -1;
    for (int i = 0; i < hi; ++i) {
        const std::size_t idx = (head_ + static_cast<std::size_t>(i)) % squares_.size();
        left += squares_[idx];
        const int split = i + 1;
        if (split < lo) continue;
        const double right = total - left;
        if (left <= 0.0 || right <= 0.0) continue;
        const double n1 = split;
        const double n2 = two_l - split;
        const double d = 0.5 * (two_l * std::log(total / two_l) - n1 * std::log(left / n1) -
                                n2 * std::log(right / n2));
        if (d > best) {
            best = d;
            best_split = split;
        }
    }
    if (best_split < 0) return GlrStep{t, true, false, 0.0, std::nullopt};

    if (best > config_.threshold) {
        const std::int64_t window_start = t - two_l + 1;
        DetectionEvent ev{t, channel_, window_start + best_split, best};
        refractory_remaining_ = config_.effective_refractory();
        return GlrStep{t, true, true, best, ev};
    }
    return GlrStep{t, true, false, best, std::nullopt};
}

}  // namespace volcd
