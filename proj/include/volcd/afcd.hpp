#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "volcd/events.hpp"
#include "volcd/rng.hpp"
#include "volcd/volatility_filter.hpp"
#include "volcd/weights.hpp"

namespace volcd {

/// Parameters of the adaptive-filtering change detector.
struct AfcdConfig {
    double mu = 0.4;            // learning rate (dimensionless; see mu normalization below)
    int slow_window = 250;      // T_s
    int fast_window = 20;       // T_f
    int desired_window = 10;    // T_d
    double gamma = 0.8;         // detection threshold on lambda
    double rho = 0.001;         // dither scale of the SS-LMS update
    int refractory = 0;         // T_r; 0 selects round(1.2 * T_s)
    WeightScheme scheme = WeightScheme::triangular;
    std::uint64_t seed = 0;

    int effective_refractory() const {
        return refractory > 0 ? refractory : static_cast<int>(std::lround(1.2 * slow_window));
    }
    void validate() const;
};

/// sigma_o = lambda * sigma_f + (1 - lambda) * sigma_s.
inline double convex_combine(double lambda, double sigma_f, double sigma_s) {
    return lambda * sigma_f + (1.0 - lambda) * sigma_s;
}

/// Signed sparse LMS step with hard clamp to [0, 1].
inline double sslms_update(double lambda, double e, double sigma_f, double sigma_s, double mu,
                           double rho, double u) {
    const double next = lambda + mu * (std::abs(lambda) + rho * u) * e * (sigma_f - sigma_s);
    return std::clamp(next, 0.0, 1.0);
}

/// Binary state map: 1 iff lambda >= gamma (boundary inclusive).
inline int threshold_state(double lambda, double gamma) { return lambda >= gamma ? 1 : 0; }

/// Per-time filter outputs of one data channel.
struct ChannelOutputs {
    double sigma_fast = 0.0;
    double sigma_slow = 0.0;
    double sigma_desired = 0.0;
};

/// Fast/slow/desired volatility filters of one channel plus the sample delay
/// line. The desired filter is a uniform average over the next
/// `desired_window` samples, so outputs for time t become available once
/// sample t + desired_window has arrived.
class ChannelPipeline {
public:
    ChannelPipeline(WeightScheme scheme, int fast_window, int slow_window, int desired_window);

    /// Feed one raw sample; returns the outputs for t = arrivals - 1 - lookahead()
    /// once every filter is warm. Throws std::domain_error on non-finite input
    /// (state unchanged).
    std::optional<ChannelOutputs> advance(double x);

    int lookahead() const { return desired_window_; }
    std::int64_t warmup_time() const { return slow_window_ - 1; }
    std::int64_t arrivals() const { return arrivals_; }

private:
    int slow_window_;
    int desired_window_;
    VolatilityFilter fast_;
    VolatilityFilter slow_;
    VolatilityFilter desired_;
    std::vector<double> delay_;  // ring of pending raw samples
    std::size_t delay_head_ = 0;
    std::size_t delay_count_ = 0;
    std::int64_t arrivals_ = 0;
};

/// One emitted step of the detector. `time` is the processed sample index,
/// which trails ingestion by the lookahead of the desired filter.
struct AfcdStep {
    std::int64_t time = -1;
    bool warm = false;
    int state = 0;         // s(t)
    double lambda = 1.0;   // lambda(t+1), the just-updated weight
    std::optional<DetectionEvent> event;
};

/// Adaptive-filtering change detector (single channel).
///
/// Each warm step computes sigma_o = lambda*sigma_f + (1-lambda)*sigma_s,
/// e = sigma_d - sigma_o, and the SS-LMS update of lambda with learning rate
/// mu / sigma_s^2 (variance normalization keeps the dynamics independent of
/// the signal scale). A detection fires on the rising edge lambda(t) < gamma
/// <= lambda(t+1) outside the refractory window; s(t) = 1 for the
/// refractory interval [t, t+T_r].
class AfcdDetector {
public:
    explicit AfcdDetector(AfcdConfig config);

    AfcdStep step(double x);

    const AfcdConfig& config() const { return config_; }
    double lambda() const { return lambda_; }
    int lookahead() const { return pipeline_.lookahead(); }
    std::int64_t warmup_time() const { return pipeline_.warmup_time(); }

private:
    AfcdConfig config_;
    ChannelPipeline pipeline_;
    Rng rng_;
    double lambda_ = 1.0;
    bool flag_ = false;
    int refractory_remaining_ = 0;
    std::int64_t arrivals_ = 0;
};

/// Effective learning rate: the configured mu divided by the slow filter's
/// variance estimate (floored to keep it finite on silent signals).
inline double normalized_mu(double mu, double sigma_slow) {
    const double var = std::max(sigma_slow * sigma_slow, 1e-12);
    return mu / var;
}

}  // namespace volcd
