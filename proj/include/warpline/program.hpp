#pragma once

#include "warpline/flux.hpp"
#include "warpline/metric.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace warpline {

/// Flux schedule for every (cell, time sample) of the array. Entries are
/// stored time-major: index = time_index·n_cells + cell. Immutable once built.
class FluxProgram {
public:
    struct Entry {
        double r;
        double t;
        double ctilde_sq;
        FluxAngle ac;
        FluxAngle total;
        FluxStatus status;
    };

    [[nodiscard]] FluxAngle dc() const { return dc_; }
    [[nodiscard]] double background_c() const { return background_c_; }
    [[nodiscard]] double c0() const { return c0_; }
    [[nodiscard]] std::size_t n_cells() const { return coords_.size(); }
    [[nodiscard]] std::size_t n_times() const { return times_.size(); }
    [[nodiscard]] const std::vector<double>& coords() const { return coords_; }
    [[nodiscard]] const std::vector<double>& times() const { return times_; }
    [[nodiscard]] const Interval& window() const { return window_; }
    [[nodiscard]] double cell_width() const { return window_.span() / n_cells(); }

    [[nodiscard]] const Entry& at(std::size_t cell, std::size_t time_index) const {
        return entries_[time_index * n_cells() + cell];
    }
    [[nodiscard]] std::span<const Entry> entries() const { return entries_; }

    /// Cells whose status is window_violation in one time sample.
    [[nodiscard]] std::size_t hot_cells(std::size_t time_index) const;
    [[nodiscard]] std::size_t count(FluxStatus status) const;

private:
    friend FluxProgram synthesize_program(const SpeedProfile&, FluxAngle, const ArrayConfig&,
                                          const Interval&, std::span<const double>);
    FluxProgram() = default;

    FluxAngle dc_;
    double background_c_ = 1.0;
    double c0_ = 1.0;
    Interval window_;
    std::vector<double> coords_;
    std::vector<double> times_;
    std::vector<Entry> entries_;
};

/// Cell-midpoint coordinate r_i = lo + (i + 1/2)·span/n.
[[nodiscard]] double cell_coordinate(const Interval& window, std::size_t n_cells, std::size_t cell);

/// Synthesizes a flux program cell by cell. Throws SynthesisFailed for the
/// first negative_ctilde / arccos_infeasible entry (time-major order) and
/// HotCellBudgetExceeded when a time sample has more than max_hot_cells
/// window_violation cells.
[[nodiscard]] FluxProgram synthesize_program(const SpeedProfile& profile, FluxAngle theta_dc,
                                             const ArrayConfig& config,
                                             const Interval& coord_window,
                                             std::span<const double> time_samples);

}  // namespace warpline
