#pragma once

#include "warpline/metric.hpp"

#include <vector>

namespace warpline {

enum class RayStatus { completed, left_domain, negative_ctilde };

const char* to_string(RayStatus status);

struct RaySample {
    double t;
    double r;
};

/// Null characteristic dr/dt = direction·c(r,t) of the reduced metric.
struct RayPath {
    std::vector<RaySample> samples;
    int direction = +1;
    RayStatus status = RayStatus::completed;
    std::vector<double> slopes;  // dr/dt at each sample

    /// Cubic Hermite interpolation between samples using dr/dt at the
    /// sample ends; clamps to the last sample past termination.
    [[nodiscard]] double position_at(double t) const;
    [[nodiscard]] double end_time() const { return samples.back().t; }
};

/// Fixed-step classical RK4 of dr/dt = direction·background_c·√c̃²(r,t).
/// Stops early (with status) when a stage leaves the valid range or meets
/// c̃² < 0. The last step is shortened to land exactly on t_end.
[[nodiscard]] RayPath trace_null_geodesic(const SpeedProfile& profile, double background_c,
                                          double r0, double t0, int direction, double t_end,
                                          double dt);

}  // namespace warpline
