#pragma once

#include <span>
#include <vector>

namespace warpline {

struct Snapshot {
    double time = 0.0;
    std::vector<double> positions;  // increasing
    std::vector<double> values;
};

inline constexpr double kDefaultFrontThreshold = 0.05;

/// Leading crossing of threshold·max|value|, scanning from the side the pulse
/// travels towards (+1: from the right end). Linear interpolation between
/// the bracketing samples. Throws FrontNotFound.
[[nodiscard]] double locate_front(const Snapshot& snapshot, double threshold = kDefaultFrontThreshold,
                                  int direction = +1);

struct FrontSpeedEstimate {
    std::vector<double> times;
    std::vector<double> positions;
    std::vector<double> speeds;  // per consecutive pair of snapshots
    double mean_speed = 0.0;
};

/// Requires at least three snapshots.
[[nodiscard]] FrontSpeedEstimate measure_front_speed(std::span<const Snapshot> snapshots,
                                                     double threshold = kDefaultFrontThreshold,
                                                     int direction = +1);

}  // namespace warpline
