#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "volcd/afcd.hpp"

namespace volcd {

/// Parameters of the cooperative (multichannel) detector: one AfcdConfig per
/// channel plus a convex combiner over the per-channel weights.
struct CafcdConfig {
    std::vector<AfcdConfig> channels;
    std::vector<double> combiner;  // empty selects uniform 1/N
    double gamma = 0.8;            // network threshold on psi
    std::uint64_t seed = 0;

    int n_channels() const { return static_cast<int>(channels.size()); }
    std::vector<double> effective_combiner() const;
    void validate() const;
};

/// All channels share one base configuration and the uniform combiner.
CafcdConfig make_uniform_cafcd_config(int n_channels, const AfcdConfig& base);

/// psi = sum_c g_c * lambda_c with convex g; stays in [0, 1].
double combine_lambdas(std::span<const double> lambdas, std::span<const double> combiner);

struct CafcdStep {
    std::int64_t time = -1;
    bool warm = false;
    int state = 0;
    double psi = 1.0;              // psi(t+1)
    std::vector<double> lambdas;   // per-channel lambda_c(t+1)
    std::optional<DetectionEvent> event;
};

/// Combine-then-adapt diffusion detector. Each channel runs the AFCD filter
/// bank; the SS-LMS update of every channel starts from the shared combined
/// weight psi, and the updated lambdas are recombined each sample. Detection,
/// refractory handling and the variance normalization of mu match the
/// single-channel detector; with one channel and g = [1] the step arithmetic
/// is identical to AfcdDetector.
class CafcdDetector {
public:
    explicit CafcdDetector(CafcdConfig config);

    CafcdStep step(std::span<const double> x);

    const CafcdConfig& config() const { return config_; }
    double psi() const { return psi_; }
    std::int64_t warmup_time() const;
    int lookahead() const;

private:
    CafcdConfig config_;
    std::vector<double> combiner_;
    std::vector<ChannelPipeline> pipelines_;
    std::vector<Rng> rngs_;
    std::vector<double> lambdas_;
    double psi_ = 1.0;
    bool flag_ = false;
    int refractory_remaining_ = 0;
    std::int64_t arrivals_ = 0;
};

}  // namespace volcd
