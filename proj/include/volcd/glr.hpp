#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "volcd/events.hpp"

namespace volcd {

/// Sliding-window generalized likelihood ratio detector for Gaussian
/// variance changes (comparison baseline).
struct GlrConfig {
    int window = 250;        // L: half the scan window
    double threshold = 5.0;  // h
    int refractory = 0;      // 0 selects L

    int effective_refractory() const { return refractory > 0 ? refractory : window; }
    int min_split() const { return window / 2; }
    int max_split() const { return 2 * window - window / 2; }
    void validate() const;
};

/// Gaussian log-likelihood ratio for a variance change at `split` within a
/// window of the 2L most recent samples (zero-mean model):
/// D = 2L ln sigma0 - n1 ln sigma1 - n2 ln sigma2 with the pooled and
/// per-side RMS values. Throws std::domain_error when either side has zero
/// energy.
double glr_statistic(std::span<const double> window, int split);

struct GlrStep {
    std::int64_t time = -1;
    bool warm = false;
    bool detected = false;
    double max_statistic = 0.0;
    std::optional<DetectionEvent> event;
};

/// Streaming max-over-splits scan: each warm step outside the refractory
/// window evaluates every admissible split of the last 2L samples and emits
/// an event when the best statistic exceeds the threshold, locating the
/// change at the maximizing split.
class GlrDetector {
public:
    explicit GlrDetector(GlrConfig config, int channel = 0);

    GlrStep step(double x);

    const GlrConfig& config() const { return config_; }

private:
    GlrConfig config_;
    int channel_;
    std::vector<double> squares_;  // ring of the last 2L squared samples
    std::size_t head_ = 0;
    std::size_t count_ = 0;
    std::int64_t arrivals_ = 0;
    int refractory_remaining_ = 0;
};

}  // namespace volcd
