#pragma once

#include <cstdint>
#include <vector>

namespace volcd {

enum class CorrelationPreset { identity, low, high };

/// Calibrated concentrations for the low/high presets (vine construction,
/// partial correlations 2*Beta(c,c)-1; smaller c means broader off-diagonals).
inline constexpr double kLowCorrelationConcentration = 8.0;
inline constexpr double kHighCorrelationConcentration = 0.5;

/// Generator settings for the piecewise-constant-variance protocol.
struct SynthConfig {
    std::int64_t total_min = 5000;
    std::int64_t total_max = 30000;
    int segment_min = 300;
    int segment_max = 700;
    double scale_down_lo = 0.5;
    double scale_down_hi = 0.85;
    double scale_up_lo = 1.2;
    double scale_up_hi = 1.7;
    double p_up = 0.5;
    double sigma0 = 1.0;  // standard deviation of the first segment
    int n_channels = 1;
    CorrelationPreset preset = CorrelationPreset::identity;
    double concentration = 0.0;  // overrides the preset when > 0
    std::uint64_t seed = 0;

    void validate() const;
};

/// Ground-truthed synthetic series.
struct Scenario {
    std::vector<std::vector<double>> channels;   // channel-major samples
    std::vector<std::int64_t> change_times;      // first sample of each new segment
    std::vector<double> segment_sigmas;          // per-segment standard deviation
    std::vector<std::vector<double>> correlation;
    std::uint64_t seed = 0;

    std::int64_t n() const { return channels.empty() ? 0 : static_cast<std::int64_t>(channels[0].size()); }
    int n_channels() const { return static_cast<int>(channels.size()); }
};

/// Random correlation matrix via the vine/onion construction: every partial
/// correlation is drawn 2*Beta(c,c)-1 with concentration c. Symmetric, unit
/// diagonal, positive semidefinite.
std::vector<std::vector<double>> random_correlation_matrix(int dim, double concentration,
                                                           std::uint64_t seed);

/// Zero-mean Gaussian series with synchronized instantaneous variance
/// changes; segment lengths, scale factors and the total length follow the
/// configured ranges.
Scenario gen_piecewise_gaussian(const SynthConfig& config);

/// Stationary unit-variance surrogate (identity correlation), for
/// false-positive calibration.
std::vector<std::vector<double>> gen_stationary_gaussian(std::int64_t n, int n_channels,
                                                         std::uint64_t seed);

/// y_t = x_{t+1} - x_t per channel; output is one sample shorter.
std::vector<std::vector<double>> first_difference(const std::vector<std::vector<double>>& channels);

/// Lower-triangular Cholesky factor (with a tiny ridge for numerically
/// semidefinite inputs). Throws std::domain_error if the matrix is not PSD.
std::vector<std::vector<double>> cholesky_factor(const std::vector<std::vector<double>>& matrix);

}  // namespace volcd
