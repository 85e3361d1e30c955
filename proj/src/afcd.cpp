#include "volcd/afcd.hpp"

#include <stdexcept>

namespace volcd {

void AfcdConfig::validate() const {
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
    if (fast_window < 2) throw std::invalid_argument("fast window must be >= 2");
    if (slow_window < 2) throw std::invalid_argument("slow window must be >= 2");
    if (fast_window >= slow_window) throw std::invalid_argument("fast window must be smaller than slow window");
    if (desired_window < 2) throw std::invalid_argument("desired window must be >= 2");
    if (gamma < 0.0 || gamma > 1.0) throw std::invalid_argument("gamma must lie in [0, 1]");
    if (rho < 0.0) throw std::invalid_argument("rho must be nonnegative");
    if (effective_refractory() < 1) throw std::invalid_argument("refractory must be >= 1 sample");
}

ChannelPipeline::ChannelPipeline(WeightScheme scheme, int fast_window, int slow_window,
                                 int desired_window)
    : slow_window_(slow_window),
      desired_window_(desired_window),
      fast_(make_fast_weights(scheme, fast_window)),
      slow_(make_slow_weights(scheme, slow_window)),
      desired_([&] {
          WeightVector w;
          w.coeffs.assign(static_cast<std::size_t>(desired_window), 1.0 / desired_window);
          return w;
      }()) {
    delay_.assign(static_cast<std::size_t>(desired_window_), 0.0);
}

std::optional<ChannelOutputs> ChannelPipeline::advance(double x) {
    if (!std::isfinite(x)) throw std::domain_error("non-finite sample");
    ++arrivals_;
    desired_.push(x);
    std::optional<double> fast_out, slow_out;
    if (delay_count_ == delay_.size()) {
        const double delayed = delay_[delay_head_];
        fast_out = fast_.push(delayed);
        slow_out = slow_.push(delayed);
        delay_[delay_head_] = x;
        delay_head_ = (delay_head_ + 1) % delay_.size();
    } else {
        delay_[(delay_head_ + delay_count_) % delay_.size()] = x;
        ++delay_count_;
    }
    if (!fast_out || !slow_out) return std::nullopt;
    return ChannelOutputs{*fast_out, *slow_out, *desired_.value()};
}

AfcdDetector::AfcdDetector(AfcdConfig config)
    : config_(std::move(config)),
      pipeline_(config_.scheme, config_.fast_window, config_.slow_window, config_.desired_window),
      rng_(Rng::derive(config_.seed, 0)) {
    config_.validate();
}

AfcdStep AfcdDetector::step(double x) {
    const auto out = pipeline_.advance(x);  // throws before any state change on bad input
    ++arrivals_;
    const std::int64_t t = arrivals_ - 1 - pipeline_.lookahead();
    if (!out) return AfcdStep{t, false, 0, lambda_, std::nullopt};

    const double u = rng_.normal();
    const double mu_eff = normalized_mu(config_.mu, out->sigma_slow);
    const double sigma_o = convex_combine(lambda_, out->sigma_fast, out->sigma_slow);
    const double e = out->sigma_desired - sigma_o;
    const double prev = lambda_;
    lambda_ = sslms_update(lambda_, e, out->sigma_fast, out->sigma_slow, mu_eff, config_.rho, u);

    if (refractory_remaining_ > 0) {
        --refractory_remaining_;
        if (refractory_remaining_ == 0) flag_ = false;
    }

    std::optional<DetectionEvent> event;
    if (lambda_ >= config_.gamma && !flag_ && prev < config_.gamma) {
        event = DetectionEvent{t, 0, std::nullopt, lambda_};
        flag_ = true;
        refractory_remaining_ = config_.effective_refractory();
    }
    const int s = (flag_ || threshold_state(lambda_, config_.gamma)) ? 1 : 0;
    return AfcdStep{t, true, s, lambda_, event};
}

}  // namespace volcd
