#include "warpline/program.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace warpline {

std::size_t FluxProgram::hot_cells(std::size_t time_index) const {
    const auto begin = entries_.begin() + static_cast<std::ptrdiff_t>(time_index * n_cells());
    return static_cast<std::size_t>(
        std::count_if(begin, begin + static_cast<std::ptrdiff_t>(n_cells()),
                      [](const Entry& e) { return e.status == FluxStatus::window_violation; }));
}

std::size_t FluxProgram::count(FluxStatus status) const {
    return static_cast<std::size_t>(std::count_if(
        entries_.begin(), entries_.end(), [&](const Entry& e) { return e.status == status; }));
}

double cell_coordinate(const Interval& window, std::size_t n_cells, std::size_t cell) {
    // Multiply before dividing so midpoints that land on a round coordinate
    // (e.g. a horizon at r = M) are hit exactly.
    return window.lo + (static_cast<double>(cell) + 0.5) * window.span() /
                           static_cast<double>(n_cells);
}

FluxProgram synthesize_program(const SpeedProfile& profile, FluxAngle theta_dc,
                               const ArrayConfig& config, const Interval& coord_window,
                               std::span<const double> time_samples) {
    config.validate();
    if (!(coord_window.lo < coord_window.hi) || !coord_window.finite())
        throw DomainError("synthesize_program: coord_window must be finite with lo < hi");
    if (!profile.valid_range().contains(coord_window))
        throw DomainError("synthesize_program: coord_window leaves the profile's valid range");
    if (!(std::abs(theta_dc.radians()) < kHalfPi))
        throw DomainError("synthesize_program: |theta_dc| must be < pi/2");
    if (time_samples.empty()) throw DomainError("synthesize_program: need a time sample");

    FluxProgram program;
    program.dc_ = theta_dc;
    program.c0_ = config.c0;
    program.background_c_ = background_speed(theta_dc, config.c0);
    program.window_ = coord_window;
    program.times_.assign(time_samples.begin(), time_samples.end());
    program.coords_.resize(config.n_cells);
    for (std::size_t i = 0; i < config.n_cells; ++i)
        program.coords_[i] = cell_coordinate(coord_window, config.n_cells, i);

    program.entries_.reserve(config.n_cells * time_samples.size());
    std::optional<SynthesisFailed> first_failure;
    for (std::size_t k = 0; k < time_samples.size(); ++k) {
        const double t = time_samples[k];
        for (std::size_t i = 0; i < config.n_cells; ++i) {
            const double r = program.coords_[i];
            const double c2 = profile.ctilde_sq(r, t);
            const PointClassification p = classify_point(c2, theta_dc, config);
            // Store total as dc + ac so the split is bit-exact.
            const FluxAngle ac = FluxAngle(p.theta_total) - theta_dc;
            program.entries_.push_back({r, t, c2, ac, theta_dc + ac, p.status});
            if (!first_failure && (p.status == FluxStatus::negative_ctilde ||
                                   p.status == FluxStatus::arccos_infeasible))
                first_failure.emplace(i, k, p.status);
        }
    }
    if (first_failure) throw *first_failure;

    for (std::size_t k = 0; k < time_samples.size(); ++k) {
        const std::size_t hot = program.hot_cells(k);
        if (hot > config.max_hot_cells) throw HotCellBudgetExceeded(hot, config.max_hot_cells, k);
    }
    return program;
}

}  // namespace warpline
