#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "volcd/volatility_filter.hpp"

namespace volcd {

/// Location-estimator settings. The differenced filter uses uniform
/// 1/(T_l - 1) weights; the scan covers [detect, detect + search_span].
struct VceConfig {
    int lag_window = 20;  // T_l
    int search_span = 0;  // 0 selects 2 * lag_window

    int effective_span() const { return search_span > 0 ? search_span : 2 * lag_window; }
    void validate() const;
};

/// Change-location estimate from the differenced volatility trace.
///
/// `sigma_d[i]` must hold sigma_D(detect_time + i) for i in
/// [0, search_span]. Returns the index of the maximum of |sigma_D| over the
/// scan window minus (T_l - 1); ties resolve to the earliest index.
std::int64_t vce_estimate(std::span<const double> sigma_d, std::int64_t detect_time,
                          const VceConfig& config);

/// Rounded (half-up) mean of per-channel location estimates.
std::int64_t multichannel_location(std::span<const std::int64_t> estimates);

/// Streams raw samples, maintains the differenced volatility trace, and
/// resolves registered detections once their scan window has filled.
class LocationTracker {
public:
    explicit LocationTracker(VceConfig config);

    /// Feed the raw sample for time `t` (samples must arrive contiguously).
    void push(double x);

    /// Register a detection awaiting a location estimate.
    void request(std::int64_t detect_time);

    /// Detections whose scan window is complete, as (detect_time, location).
    std::vector<std::pair<std::int64_t, std::int64_t>> take_ready();

private:
    std::optional<double> sigma_d_at(std::int64_t t) const;

    VceConfig config_;
    DifferencedVolatility diff_;
    std::vector<double> ring_;       // sigma_D values by absolute time
    std::int64_t next_time_ = 0;     // next raw-sample time to ingest
    std::int64_t newest_sigma_ = -1; // latest time with a defined sigma_D
    std::deque<std::int64_t> pending_;
    std::vector<std::pair<std::int64_t, std::int64_t>> ready_;
};

}  // namespace volcd
