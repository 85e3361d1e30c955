#pragma once

#include <cstdint>
#include <optional>

namespace volcd {

/// One detected volatility change. `weight` is the detector score at the
/// crossing (lambda for AFCD, psi for CAFCD, max statistic for GLR).
struct DetectionEvent {
    std::int64_t detect_time = 0;           // 0-based sample index
    int channel = 0;                        // source channel; 0 for network-level detectors
    std::optional<std::int64_t> location;   // estimated change location, if any
    double weight = 0.0;
};

}  // namespace volcd
