#include "volcd/vce.hpp"

#include <cmath>
#include <stdexcept>

namespace volcd {

void VceConfig::validate() const {
    if (lag_window < 2) throw std::invalid_argument("lag window must be >= 2");
    if (search_span != 0 && search_span < lag_window)
        throw std::invalid_argument("search span must be >= lag window");
}

std::int64_t vce_estimate(std::span<const double> sigma_d, std::int64_t detect_time,
                          const VceConfig& config) {
    config.validate();
    const int span = config.effective_span();
    if (sigma_d.size() < static_cast<std::size_t>(span) + 1)
        throw std::invalid_argument("sigma_D history does not cover the scan window");
    std::size_t best = 0;
    double best_val = std::abs(sigma_d[0]);
    for (std::size_t i = 1; i <= static_cast<std::size_t>(span); ++i) {
        const double v = std::abs(sigma_d[i]);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    return detect_time + static_cast<std::int64_t>(best) - config.lag_window + 1;
}

std::int64_t multichannel_location(std::span<const std::int64_t> estimates) {
    if (estimates.empty()) throw std::invalid_argument("no channel estimates to combine");
    double sum = 0.0;
    for (std::int64_t v : estimates) sum += static_cast<double>(v);
    return static_cast<std::int64_t>(std::floor(sum / static_cast<double>(estimates.size()) + 0.5));
}

LocationTracker::LocationTracker(VceConfig config) : config_(config), diff_(config.lag_window) {
    config_.validate();
    // Capacity: the scan window plus slack for detectors that report with a
    // lookahead delay.
    ring_.assign(static_cast<std::size_t>(config_.effective_span()) + 2 * config_.lag_window + 64,
                 0.0);
}

std::optional<double> LocationTracker::sigma_d_at(std::int64_t t) const {
    const std::int64_t first_defined = 2 * config_.lag_window - 1;
    if (t < first_defined || t > newest_sigma_) return std::nullopt;
    if (newest_sigma_ - t >= static_cast<std::int64_t>(ring_.size())) return std::nullopt;
    return ring_[static_cast<std::size_t>(t % static_cast<std::int64_t>(ring_.size()))];
}

void LocationTracker::push(double x) {
    const std::int64_t t = next_time_++;
    const auto sd = diff_.push(x);
    if (sd) {
        ring_[static_cast<std::size_t>(t % static_cast<std::int64_t>(ring_.size()))] = *sd;
        newest_sigma_ = t;
    }
    const int span = config_.effective_span();
    while (!pending_.empty() && newest_sigma_ >= pending_.front() + span) {
        const std::int64_t detect = pending_.front();
        pending_.pop_front();
        std::vector<double> window(static_cast<std::size_t>(span) + 1);
        bool complete = true;
        for (int i = 0; i <= span; ++i) {
            const auto v = sigma_d_at(detect + i);
            if (!v) {
                complete = false;
                break;
            }
            window[static_cast<std::size_t>(i)] = *v;
        }
        if (complete) ready_.emplace_back(detect, vce_estimate(window, detect, config_));
        // Windows that fell out of the ring (detection registered too late)
        // are dropped; the event keeps no location estimate.
    }
}

void LocationTracker::request(std::int64_t detect_time) {
    if (detect_time < 0) throw std::invalid_argument("detection time must be nonnegative");
    pending_.push_back(detect_time);
}

std::vector<std::pair<std::int64_t, std::int64_t>> LocationTracker::take_ready() {
    auto out = std::move(ready_);
    ready_.clear();
    return out;
}

}  // namespace volcd
