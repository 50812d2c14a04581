#pragma once

#include "warpline/flux.hpp"
#include "warpline/front.hpp"
#include "warpline/metric.hpp"
#include "warpline/program.hpp"
#include "warpline/ray.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace warpline {

enum class SolverChoice { continuum, ladder, both };

const char* to_string(SolverChoice solver);

struct RunSpec {
    SolverChoice solver = SolverChoice::continuum;
    double pulse_center = 0.0;
    double pulse_width = 0.05;
    int direction = +1;
    /// Simulated time. <= 0 picks the time at which the ray oracle reaches
    /// the absorbing layer (or 20 crossing times if it never does).
    double t_end = 0.0;
    std::size_t snapshots = 16;
    double threshold = kDefaultFrontThreshold;
    double tolerance = 0.05;
    std::size_t levels = 3;          // nested continuum grids
    double points_per_width = 4.0;   // coarsest continuum resolution
    double cfl = 0.5;
    double ray_dt = 0.0;             // <= 0: width/(200·c_max)
    double min_travel = 0.0;         // <= 0: two pulse widths
    double sponge_fraction = 0.1;
    bool keep_snapshots = false;
};

struct GridRun {
    std::string solver;
    std::size_t n_points = 0;
    double dx = 0.0;
    double dt = 0.0;
    std::size_t steps = 0;
    std::vector<double> times;
    std::vector<double> front;
    std::vector<double> ray;
    double max_abs_error = 0.0;      // max |front - ray|
    double max_rel_deviation = 0.0;  // max |front - ray| / |ray - x0| past min_travel
    double mean_front_speed = 0.0;
    double max_causality_ratio = 0.0;  // front speed / local c, worst interval
    std::vector<Snapshot> snapshots;   // only with RunSpec::keep_snapshots
};

/// Horizon stall check, used when the program contains hot cells.
struct StallCheck {
    double horizon_r = 0.0;
    bool ray_stalled = false;
    bool wave_stalled = false;
    double ray_speed_ratio = 0.0;   // final / initial
    double wave_speed_ratio = 0.0;  // final / initial
    double ray_final_r = 0.0;
    double wave_final_r = 0.0;
};

struct VerificationReport {
    std::vector<GridRun> runs;
    std::vector<double> convergence_ratios;  // continuum error(level) / error(level + 1)
    double launch_front = 0.0;               // x0 of the ray oracle
    double t_end = 0.0;
    double max_deviation = 0.0;              // finest grid of each solver, worst
    double tolerance = 0.0;
    bool passed = false;
    std::optional<StallCheck> stall;
    std::map<std::string, double> quantities;
};

/// Simulates the program and compares the wave front with the null-geodesic
/// oracle launched from the analytic initial front point. The continuum
/// solver uses the speed realised by the synthesized flux,
/// c0²|cos theta_total(r,t)|; the ladder uses the program's per-cell fluxes
/// (sampled from the continuous schedule each step when time-dependent).
[[nodiscard]] VerificationReport verify_program(const FluxProgram& program,
                                                const SpeedProfile& profile,
                                                const ArrayConfig& config, const RunSpec& spec);

/// Single continuum run at spacing dx; exposed for convergence studies.
[[nodiscard]] GridRun run_continuum(const SpeedProfile& profile, FluxAngle theta_dc, double c0,
                                    const Interval& window, double dx, const RunSpec& spec,
                                    const RayPath& ray, double t_end);

/// Single ladder run over the program's cells.
[[nodiscard]] GridRun run_ladder(const FluxProgram& program, const SpeedProfile& profile,
                                 const RunSpec& spec, const RayPath& ray, double t_end);

}  // namespace warpline
