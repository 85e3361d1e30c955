#include "volcd/weights.hpp"

#include <stdexcept>

namespace volcd {

double WeightVector::sum() const {
    double s = 0.0;
    for (double w : coeffs) s += w;
    return s;
}

namespace {
void check_window(int window) {
    if (window < 2) throw std::invalid_argument("volatility window must be >= 2 samples");
}
}  // namespace

WeightVector make_uniform_weights(int window) {
    check_window(window);
    WeightVector w;
    w.coeffs.assign(static_cast<std::size_t>(window), 1.0 / (window - 1));
    return w;
}

WeightVector make_triangular_slow_weights(int window) {
    check_window(window);
    const double norm = 0.5 * window * (window + 1.0);
    WeightVector w;
    w.coeffs.resize(static_cast<std::size_t>(window));
    for (int k = 1; k <= window; ++k) w.coeffs[static_cast<std::size_t>(k - 1)] = k / norm;
    return w;
}

WeightVector make_triangular_fast_weights(int window) {
    check_window(window);
    const double norm = 0.5 * window * (window + 1.0);
    WeightVector w;
    w.coeffs.resize(static_cast<std::size_t>(window));
    for (int k = 1; k <= window; ++k) w.coeffs[static_cast<std::size_t>(k - 1)] = (window - k + 1) / norm;
    return w;
}

WeightVector make_fast_weights(WeightScheme scheme, int window) {
    return scheme == WeightScheme::triangular ? make_triangular_fast_weights(window)
                                              : make_uniform_weights(window);
}

WeightVector make_slow_weights(WeightScheme scheme, int window) {
    return scheme == WeightScheme::triangular ? make_triangular_slow_weights(window)
                                              : make_uniform_weights(window);
}

}  // namespace volcd
