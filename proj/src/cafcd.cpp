#include "volcd/cafcd.hpp"

#include <cmath>
#include <stdexcept>

namespace volcd {

std::vector<double> CafcdConfig::effective_combiner() const {
    if (!combiner.empty()) return combiner;
    return std::vector<double>(channels.size(), 1.0 / static_cast<double>(channels.size()));
}

void CafcdConfig::validate() const {
    if (channels.empty()) throw std::invalid_argument("at least one channel required");
    for (const auto& c : channels) c.validate();
    if (gamma < 0.0 || gamma > 1.0) throw std::invalid_argument("gamma must lie in [0, 1]");
    const auto g = effective_combiner();
    if (g.size() != channels.size())
        throw std::invalid_argument("combiner length must match channel count");
    double sum = 0.0;
    for (double v : g) {
        if (v < 0.0) throw std::invalid_argument("combiner weights must be nonnegative");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("combiner weights must sum to 1");
}

CafcdConfig make_uniform_cafcd_config(int n_channels, const AfcdConfig& base) {
    if (n_channels < 1) throw std::invalid_argument("at least one channel required");
    CafcdConfig cfg;
    cfg.channels.assign(static_cast<std::size_t>(n_channels), base);
    cfg.gamma = base.gamma;
    cfg.seed = base.seed;
    return cfg;
}

double combine_lambdas(std::span<const double> lambdas, std::span<const double> combiner) {
    if (lambdas.size() != combiner.size())
        throw std::invalid_argument("lambda and combiner lengths differ");
    double acc = 0.0;
    for (std::size_t c = 0; c < lambdas.size(); ++c) acc += combiner[c] * lambdas[c];
    return acc;
}

CafcdDetector::CafcdDetector(CafcdConfig config) : config_(std::move(config)) {
    config_.validate();
    combiner_ = config_.effective_combiner();
    pipelines_.reserve(config_.channels.size());
    rngs_.reserve(config_.channels.size());
    for (std::size_t c = 0; c < config_.channels.size(); ++c) {
        const auto& ch = config_.channels[c];
        pipelines_.emplace_back(ch.scheme, ch.fast_window, ch.slow_window, ch.desired_window);
        rngs_.emplace_back(Rng::derive(config_.seed, c));
    }
    lambdas_.assign(config_.channels.size(), 1.0);
}

std::int64_t CafcdDetector::warmup_time() const {
    std::int64_t t = 0;
    for (const auto& p : pipelines_) t = std::max(t, p.warmup_time());
    return t;
}

int CafcdDetector::lookahead() const {
    int l = 0;
    for (const auto& p : pipelines_) l = std::max(l, p.lookahead());
    return l;
}

CafcdStep CafcdDetector::step(std::span<const double> x) {
    const std::size_t n = pipelines_.size();
    if (x.size() != n) throw std::invalid_argument("sample vector length must equal channel count");
    for (double v : x) {
        if (!std::isfinite(v)) throw std::domain_error("non-finite sample");
    }

    std::vector<std::optional<ChannelOutputs>> outs(n);
    bool all_warm = true;
    for (std::size_t c = 0; c < n; ++c) {
        outs[c] = pipelines_[c].advance(x[c]);
        all_warm = all_warm && outs[c].has_value();
    }
    ++arrivals_;
    const std::int64_t t = arrivals_ - 1 - lookahead();
    if (!all_warm) return CafcdStep{t, false, 0, psi_, lambdas_, std::nullopt};

    const double prev = psi_;
    for (std::size_t c = 0; c < n; ++c) {
        const auto& o = *outs[c];
        const auto& ch = config_.channels[c];
        const double u = rngs_[c].normal();
        const double mu_eff = normalized_mu(ch.mu, o.sigma_slow);
        const double sigma_o = convex_combine(psi_, o.sigma_fast, o.sigma_slow);
        const double e = o.sigma_desired - sigma_o;
        lambdas_[c] = sslms_update(psi_, e, o.sigma_fast, o.sigma_slow, mu_eff, ch.rho, u);
    }
    psi_ = combine_lambdas(lambdas_, combiner_);

    if (refractory_remaining_ > 0) {
        --refractory_remaining_;
        if (refractory_remaining_ == 0) flag_ = false;
    }

    std::optional<DetectionEvent> event;
    if (psi_ >= config_.gamma && !flag_ && prev < config_.gamma) {
        event = DetectionEvent{t, 0, std::nullopt, psi_};
        flag_ = true;
        int refr = 1;
        for (const auto& ch : config_.channels) refr = std::max(refr, ch.effective_refractory());
        refractory_remaining_ = refr;
    }
    const int s = (flag_ || threshold_state(psi_, config_.gamma)) ? 1 : 0;
    return CafcdStep{t, true, s, psi_, lambdas_, event};
}

}  // namespace volcd
