#include "warpline/verify.hpp"

#include "warpline/continuum.hpp"
#include "warpline/errors.hpp"
#include "warpline/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace warpline {

const char* to_string(SolverChoice solver) {
    switch (solver) {
        case SolverChoice::continuum: return "continuum";
        case SolverChoice::ladder: return "ladder";
        case SolverChoice::both: return "both";
    }
    return "unknown";
}

namespace {

constexpr double kStallRatio = 0.05;

double initial_front(const RunSpec& spec) {
    return spec.pulse_center +
           spec.direction * spec.pulse_width * std::sqrt(2.0 * std::log(1.0 / spec.threshold));
}

double min_travel(const RunSpec& spec) {
    return spec.min_travel > 0.0 ? spec.min_travel : 2.0 * spec.pulse_width;
}

std::vector<double> snapshot_times(double t_end, std::size_t count) {
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k)
        out[k] = t_end * static_cast<double>(k) / static_cast<double>(count - 1);
    return out;
}

/// Fills front/ray/error columns of `run` from its snapshots.
void score_run(GridRun& run, const std::vector<Snapshot>& snaps, const RunSpec& spec,
               const RayPath& ray, double x0,
               const std::function<double(double, double)>& local_speed) {
    const double travel = min_travel(spec);
    for (const auto& s : snaps) {
        run.times.push_back(s.time);
        run.front.push_back(locate_front(s, spec.threshold, spec.direction));
        run.ray.push_back(ray.position_at(s.time));
    }
    for (std::size_t k = 1; k < run.times.size(); ++k) {
        const double err = std::abs(run.front[k] - run.ray[k]);
        run.max_abs_error = std::max(run.max_abs_error, err);
        const double moved = std::abs(run.ray[k] - x0);
        if (moved >= travel) run.max_rel_deviation = std::max(run.max_rel_deviation, err / moved);

        const double dt = run.times[k] - run.times[k - 1];
        const double speed = std::abs(run.front[k] - run.front[k - 1]) / dt;
        double c_local = 0.0;
        for (int q = 0; q <= 8; ++q) {
            const double w = q / 8.0;
            const double x = run.front[k - 1] + w * (run.front[k] - run.front[k - 1]);
            c_local = std::max({c_local, local_speed(x, run.times[k - 1]),
                                local_speed(x, run.times[k])});
        }
        if (c_local > 0.0) run.max_causality_ratio = std::max(run.max_causality_ratio, speed / c_local);
    }
    const std::size_t last = run.times.size() - 1;
    run.mean_front_speed = (run.front[last] - run.front[0]) / (run.times[last] - run.times[0]);
}

bool has_hot_cells(const FluxProgram& program) {
    return program.count(FluxStatus::window_violation) > 0;
}

}  // namespace

GridRun run_continuum(const SpeedProfile& profile, FluxAngle theta_dc, double c0,
                      const Interval& window, double dx, const RunSpec& spec, const RayPath& ray,
                      double t_end) {
    const SpeedSquaredField field = field_from_flux(profile, theta_dc, c0, window);
    ContinuumGrid grid = make_continuum_grid(window, dx, field, spec.cfl);
    grid.sponge_fraction = spec.sponge_fraction;
    grid.left = spec.direction > 0 ? Boundary::reflecting : Boundary::absorbing_sponge;
    grid.right = spec.direction > 0 ? Boundary::absorbing_sponge : Boundary::reflecting;

    ContinuumState state =
        launch_pulse(grid, field, spec.pulse_center, spec.pulse_width, spec.direction, 0.0);
    ContinuumWorkspace ws;

    GridRun run;
    run.solver = "continuum";
    run.n_points = grid.n_points;
    run.dx = grid.dx;
    run.dt = grid.dt;

    std::vector<double> positions(grid.n_points);
    for (std::size_t j = 0; j < grid.n_points; ++j) positions[j] = grid.position(j);
    std::vector<Snapshot> snaps;
    const auto targets = snapshot_times(t_end, spec.snapshots);
    std::size_t next = 0;
    while (next < targets.size()) {
        if (state.time >= targets[next] - 0.5 * grid.dt) {
            snaps.push_back({state.time, positions, state.current});
            ++next;
            continue;
        }
        fdtd_step(state, field, grid, ws);
        ++run.steps;
    }
    score_run(run, snaps, spec, ray, ray.samples.front().r,
              [&](double x, double t) { return std::sqrt(field.speed_sq(x, t)); });
    if (spec.keep_snapshots) run.snapshots = std::move(snaps);
    return run;
}

GridRun run_ladder(const FluxProgram& program, const SpeedProfile& profile, const RunSpec& spec,
                   const RayPath& ray, double t_end) {
    const std::size_t n = program.n_cells();
    const double pitch = program.cell_width();
    LadderEnds ends;
    ends.absorbing_left = spec.direction < 0;
    ends.absorbing_right = spec.direction > 0;
    ends.sponge_fraction = spec.sponge_fraction;
    LadderState state = make_ladder(n, pitch, program.c0(), program.window().lo, ends);
    const double dt = spec.cfl * pitch / program.c0();

    const bool dynamic = profile.time_dependent();
    std::vector<double> theta(n);
    auto fluxes_at = [&](double t) -> const std::vector<double>& {
        for (std::size_t i = 0; i < n; ++i) {
            if (!dynamic) {
                theta[i] = program.at(i, 0).total.radians();
                continue;
            }
            const SynthesisAttempt a =
                attempt_synthesis(profile.ctilde_sq(program.coords()[i], t), program.dc(), 0.0);
            if (a.status == FluxStatus::negative_ctilde || a.status == FluxStatus::arccos_infeasible)
                throw SimulationError("ladder schedule infeasible at cell " + std::to_string(i));
            theta[i] = a.theta_total;
        }
        return theta;
    };

    launch_ladder_pulse(state, fluxes_at(0.0), spec.pulse_center, spec.pulse_width,
                        spec.direction, dt);

    GridRun run;
    run.solver = "ladder";
    run.n_points = n + 1;
    run.dx = pitch;
    run.dt = dt;

    std::vector<double> positions(n + 1);
    for (std::size_t i = 0; i <= n; ++i) positions[i] = state.node_position(i);
    std::vector<Snapshot> snaps;
    const auto targets = snapshot_times(t_end, spec.snapshots);
    std::size_t next = 0;
    while (next < targets.size()) {
        if (state.time >= targets[next] - 0.5 * dt) {
            snaps.push_back({state.time, positions, state.voltages});
            ++next;
            continue;
        }
        ladder_step(state, fluxes_at(state.time + 0.5 * dt), dt);
        ++run.steps;
    }

    const double c0 = program.c0();
    const FluxAngle dc = program.dc();
    score_run(run, snaps, spec, ray, ray.samples.front().r, [&](double x, double t) {
        const double r = std::clamp(x, program.coords().front(), program.coords().back());
        const SynthesisAttempt a = attempt_synthesis(profile.ctilde_sq(r, t), dc, 0.0);
        return std::isfinite(a.theta_total)
                   ? std::sqrt(speed_sq_from_flux(FluxAngle(a.theta_total), c0))
                   : 0.0;
    });
    if (spec.keep_snapshots) run.snapshots = std::move(snaps);
    return run;
}

VerificationReport verify_program(const FluxProgram& program, const SpeedProfile& profile,
                                  const ArrayConfig& config, const RunSpec& spec) {
    config.validate();
    if (program.count(FluxStatus::negative_ctilde) > 0 ||
        program.count(FluxStatus::arccos_infeasible) > 0)
        throw DomainError("verify_program: program is not feasible");
    if (spec.snapshots < 3) throw DomainError("verify_program: need at least 3 snapshots");
    if (spec.levels < 1) throw DomainError("verify_program: need at least one grid level");
    if (!(spec.pulse_width > 0.0)) throw DomainError("verify_program: pulse width must be > 0");
    if (spec.direction != 1 && spec.direction != -1)
        throw DomainError("verify_program: direction must be ±1");

    const Interval window = program.window();
    const double bg = program.background_c();
    const double x0 = initial_front(spec);
    if (!window.contains(x0) || !window.contains(spec.pulse_center))
        throw DomainError("verify_program: pulse must start inside the program window");

    VerificationReport report;
    report.tolerance = spec.tolerance;
    report.launch_front = x0;

    const double c_max = bg * std::sqrt(std::max(1e-300, profile.max_ctilde_sq(window)));
    const double ray_dt = spec.ray_dt > 0.0 ? spec.ray_dt : spec.pulse_width / (200.0 * c_max);
    const double c_launch = bg * std::sqrt(std::max(0.0, profile.ctilde_sq(x0, 0.0)));
    const double t_horizon = 20.0 * window.span() / std::max(c_launch, 1e-12);

    double t_end = spec.t_end;
    RayPath ray;
    if (t_end > 0.0) {
        ray = trace_null_geodesic(profile, bg, x0, 0.0, spec.direction, t_end, ray_dt);
    } else {
        const double layer = spec.sponge_fraction * window.span();
        const double stop = spec.direction > 0 ? window.hi - layer - spec.pulse_width
                                               : window.lo + layer + spec.pulse_width;
        ray = trace_null_geodesic(profile, bg, x0, 0.0, spec.direction, t_horizon, ray_dt);
        t_end = ray.end_time();
        for (const auto& s : ray.samples) {
            if (spec.direction * (s.r - stop) >= 0.0) {
                t_end = s.t;
                break;
            }
        }
    }
    if (!(t_end > 0.0)) throw DomainError("verify_program: ray oracle does not advance");
    report.t_end = t_end;

    const bool stall_mode = has_hot_cells(program);
    const bool want_continuum = stall_mode || spec.solver != SolverChoice::ladder;
    const bool want_ladder = !stall_mode && spec.solver != SolverChoice::continuum;

    if (want_continuum) {
        double dx = spec.pulse_width / spec.points_per_width;
        for (std::size_t level = 0; level < spec.levels; ++level, dx *= 0.5)
            report.runs.push_back(
                run_continuum(profile, program.dc(), program.c0(), window, dx, spec, ray, t_end));
        for (std::size_t level = 0; level + 1 < spec.levels; ++level)
            report.convergence_ratios.push_back(report.runs[level].max_abs_error /
                                                report.runs[level + 1].max_abs_error);
        report.max_deviation = report.runs.back().max_rel_deviation;
    }
    if (want_ladder) {
        report.runs.push_back(run_ladder(program, profile, spec, ray, t_end));
        report.max_deviation = std::max(report.max_deviation, report.runs.back().max_rel_deviation);
    }
    report.passed = report.max_deviation <= spec.tolerance;

    if (stall_mode) {
        StallCheck stall;
        for (const auto& e : program.entries()) {
            if (e.status == FluxStatus::window_violation) {
                stall.horizon_r = e.r;
                break;
            }
        }
        stall.ray_final_r = ray.samples.back().r;
        stall.ray_speed_ratio = std::abs(ray.slopes.back()) / std::abs(ray.slopes.front());
        stall.ray_stalled = spec.direction * (stall.horizon_r - stall.ray_final_r) > 0.0 &&
                            stall.ray_speed_ratio < kStallRatio;

        const GridRun& finest = report.runs[spec.levels - 1];
        const std::size_t last = finest.times.size() - 1;
        const double first_speed =
            std::abs(finest.front[1] - finest.front[0]) / (finest.times[1] - finest.times[0]);
        const double last_speed = std::abs(finest.front[last] - finest.front[last - 1]) /
                                  (finest.times[last] - finest.times[last - 1]);
        stall.wave_final_r = finest.front[last];
        stall.wave_speed_ratio = last_speed / first_speed;
        bool crossed = false;
        for (double x : finest.front)
            crossed = crossed || spec.direction * (x - stall.horizon_r) > finest.dx;
        stall.wave_stalled = !crossed && stall.wave_speed_ratio < kStallRatio;
        report.passed = stall.ray_stalled && stall.wave_stalled;
        report.stall = stall;
    }

    report.quantities["background_c_over_c0"] = bg / program.c0();
    if (profile.kind() == ProfileKind::alcubierre) {
        const double vs = std::get<AlcubierreParams>(profile.params()).vs_over_c;
        report.quantities["bubble_lab_speed_over_c0"] = vs * bg / program.c0();
        report.quantities["interior_light_speed_over_c0"] = (1.0 + vs) * bg / program.c0();
        report.quantities["quoted_ac_speed_over_c0"] = 0.6;
    }
    if (!report.runs.empty())
        report.quantities["finest_front_speed_over_c0"] =
            report.runs.back().mean_front_speed / program.c0();
    return report;
}

}  // namespace warpline
