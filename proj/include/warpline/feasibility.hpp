#pragma once

#include "warpline/flux.hpp"
#include "warpline/metric.hpp"

#include <functional>
#include <vector>

namespace warpline {

/// Builds the profile for one value of the family's metric parameter
/// (v_s/c, a, Kerr theta, ...).
using ProfileFamily = std::function<SpeedProfile(double param)>;

struct FeasibilityGrid {
    std::vector<double> params;    // metric parameter axis
    std::vector<double> theta_dc;  // radians
    std::vector<double> coords;    // r (or x) axis
    double time = 0.0;

    [[nodiscard]] std::size_t size() const {
        return params.size() * theta_dc.size() * coords.size();
    }
};

struct FeasibilityPoint {
    double param;
    double theta_dc;
    double r;
    FluxStatus status;
    double theta_total;  // NaN where undefined
};

/// Points are ordered param-major, then theta_dc, then r.
struct FeasibilityReport {
    FeasibilityGrid grid;
    std::vector<FeasibilityPoint> points;

    [[nodiscard]] const FeasibilityPoint& at(std::size_t param, std::size_t dc,
                                             std::size_t r) const {
        return points[(param * grid.theta_dc.size() + dc) * grid.coords.size() + r];
    }
    [[nodiscard]] std::size_t count(FluxStatus status) const;
};

/// Worker count from WARPLINE_WORKERS, else hardware concurrency (>= 1).
[[nodiscard]] unsigned default_worker_count();

/// Dense classify_point over the grid. Work is split into contiguous chunks
/// of the flattened index; each worker writes only its own slots, so the
/// result does not depend on `workers`.
[[nodiscard]] FeasibilityReport feasibility_scan(const ProfileFamily& family,
                                                 const FeasibilityGrid& grid,
                                                 const ArrayConfig& config,
                                                 unsigned workers = 0);

/// n evenly spaced values from lo to hi inclusive (n == 1 gives {lo}).
[[nodiscard]] std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace warpline
