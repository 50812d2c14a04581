#include "warpline/continuum.hpp"

#include "warpline/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace warpline {

SpeedSquaredField field_from_profile(const SpeedProfile& profile, double background_c,
                                     const Interval& window) {
    if (!(background_c > 0.0)) throw DomainError("field: background_c must be > 0");
    SpeedSquaredField field;
    field.time_dependent = profile.time_dependent();
    field.c_max = background_c * std::sqrt(std::max(0.0, profile.max_ctilde_sq(window)));
    field.speed_sq = [profile, c2 = background_c * background_c](double r, double t) {
        const double v = profile.ctilde_sq(r, t);
        if (v < 0.0)
            throw SimulationError("negative c̃² at r=" + std::to_string(r) +
                                  "; the section cannot be simulated there");
        return c2 * v;
    };
    return field;
}

SpeedSquaredField field_from_flux(const SpeedProfile& profile, FluxAngle theta_dc, double c0,
                                  const Interval& window) {
    if (!(c0 > 0.0)) throw DomainError("field: c0 must be > 0");
    const double bg = background_speed(theta_dc, c0);
    SpeedSquaredField field;
    field.time_dependent = profile.time_dependent();
    field.c_max =
        std::min(c0, bg * std::sqrt(std::max(0.0, profile.max_ctilde_sq(window))) * (1.0 + 1e-12));
    field.speed_sq = [profile, theta_dc, c0](double r, double t) {
        // Window violations still have a defined total flux (pi/2 at a
        // horizon); only negative and arccos failures are unrealisable.
        const SynthesisAttempt a = attempt_synthesis(profile.ctilde_sq(r, t), theta_dc, 0.0);
        if (a.status == FluxStatus::negative_ctilde || a.status == FluxStatus::arccos_infeasible)
            throw SimulationError(std::string("flux program is ") + to_string(a.status) +
                                  " at r=" + std::to_string(r));
        return speed_sq_from_flux(FluxAngle(a.theta_total), c0);
    };
    return field;
}

ContinuumGrid make_continuum_grid(const Interval& window, double dx,
                                  const SpeedSquaredField& field, double cfl_factor) {
    if (!window.finite() || !(window.lo < window.hi))
        throw DomainError("continuum grid: window must be finite with lo < hi");
    if (!(dx > 0.0)) throw DomainError("continuum grid: dx must be > 0");
    if (!(cfl_factor > 0.0 && cfl_factor <= 1.0))
        throw DomainError("continuum grid: cfl_factor must lie in (0, 1]");
    if (!(field.c_max > 0.0)) throw DomainError("continuum grid: c_max must be > 0");
    ContinuumGrid grid;
    const auto cells = static_cast<std::size_t>(std::llround(window.span() / dx));
    grid.n_points = std::max<std::size_t>(cells, 2) + 1;
    grid.origin = window.lo;
    grid.dx = window.span() / static_cast<double>(grid.n_points - 1);
    grid.cfl_factor = cfl_factor;
    grid.dt = cfl_factor * grid.dx / field.c_max;
    return grid;
}

ContinuumState launch_pulse(const ContinuumGrid& grid, const SpeedSquaredField& field,
                            double center, double width, int direction, double t0) {
    if (!(width > 0.0)) throw DomainError("pulse width must be > 0");
    if (direction != 1 && direction != -1) throw DomainError("pulse direction must be ±1");
    ContinuumState state;
    state.time = t0;
    state.current.resize(grid.n_points);
    state.previous.resize(grid.n_points);
    auto g = [&](double x) {
        const double s = (x - center) / width;
        return std::exp(-0.5 * s * s);
    };
    for (std::size_t j = 0; j < grid.n_points; ++j) {
        const double x = grid.position(j);
        const double c = std::sqrt(field.speed_sq(x, t0));
        state.current[j] = g(x);
        state.previous[j] = g(x + direction * c * grid.dt);
    }
    return state;
}

namespace {

void build_damping(const ContinuumGrid& grid, double c_max, std::vector<double>& damping) {
    damping.assign(grid.n_points, 0.0);
    const double length = grid.extent().span();
    const double layer = grid.sponge_fraction * length;
    if (!(layer > 0.0)) return;
    const double peak = 1.0 * c_max / layer;
    for (std::size_t j = 0; j < grid.n_points; ++j) {
        const double x = grid.position(j) - grid.origin;
        double depth = 0.0;
        if (grid.left == Boundary::absorbing_sponge && x < layer) depth = (layer - x) / layer;
        if (grid.right == Boundary::absorbing_sponge && x > length - layer)
            depth = std::max(depth, (x - (length - layer)) / layer);
        damping[j] = peak * depth * depth;
    }
}

}  // namespace

void fdtd_step(ContinuumState& state, const SpeedSquaredField& field, const ContinuumGrid& grid,
               ContinuumWorkspace& ws) {
    const std::size_t n = grid.n_points;
    if (state.current.size() != n || state.previous.size() != n)
        throw DomainError("fdtd_step: state does not match the grid");
    if (ws.damping.size() != n) build_damping(grid, field.c_max, ws.damping);
    if (ws.face_speed_sq.size() != n - 1 || field.time_dependent) {
        ws.face_speed_sq.resize(n - 1);
        double prev_node = field.speed_sq(grid.position(0), state.time);
        double max_node = prev_node;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            const double node = field.speed_sq(grid.position(j + 1), state.time);
            max_node = std::max(max_node, node);
            ws.face_speed_sq[j] = 0.5 * (prev_node + node);
            prev_node = node;
        }
        if (std::sqrt(max_node) > field.c_max * (1.0 + 1e-9))
            throw CflViolation("fdtd_step: local speed " + std::to_string(std::sqrt(max_node)) +
                               " exceeds the CFL bound " + std::to_string(field.c_max) +
                               " at t=" + std::to_string(state.time));
    }

    const double lambda = (grid.dt * grid.dt) / (grid.dx * grid.dx);
    const double dt = grid.dt;
    ws.next.resize(n);
    const auto& u = state.current;
    const auto& up = state.previous;
    for (std::size_t j = 0; j < n; ++j) {
        const double right = j + 1 < n ? ws.face_speed_sq[j] * (u[j + 1] - u[j]) : 0.0;
        const double left = j > 0 ? ws.face_speed_sq[j - 1] * (u[j] - u[j - 1]) : 0.0;
        const double s = 0.5 * ws.damping[j] * dt;
        ws.next[j] = (2.0 * u[j] - (1.0 - s) * up[j] + lambda * (right - left)) / (1.0 + s);
    }
    // One-way (Mur) closure on absorbing ends: the sponge alone cannot remove the
    // low-frequency part of a pulse, so whatever reaches the end node leaves the domain.
    auto outgoing = [&](std::size_t edge, std::size_t inner, double speed_sq) {
        const double k = (std::sqrt(speed_sq) * dt - grid.dx) / (std::sqrt(speed_sq) * dt + grid.dx);
        ws.next[edge] = u[inner] + k * (ws.next[inner] - u[edge]);
    };
    if (grid.left == Boundary::absorbing_sponge) outgoing(0, 1, ws.face_speed_sq.front());
    if (grid.right == Boundary::absorbing_sponge) outgoing(n - 1, n - 2, ws.face_speed_sq.back());
    state.previous.swap(state.current);
    state.current.swap(ws.next);
    state.time += dt;
}

double continuum_energy(const ContinuumState& state, const SpeedSquaredField& field,
                        const ContinuumGrid& grid) {
    const std::size_t n = grid.n_points;
    double kinetic = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double v = (state.current[j] - state.previous[j]) / grid.dt;
        kinetic += v * v;
    }
    double potential = 0.0;
    double prev_node = field.speed_sq(grid.position(0), state.time);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double node = field.speed_sq(grid.position(j + 1), state.time);
        const double face = 0.5 * (prev_node + node);
        prev_node = node;
        potential += face * (state.current[j + 1] - state.current[j]) *
                     (state.previous[j + 1] - state.previous[j]);
    }
    return 0.5 * kinetic * grid.dx + 0.5 * potential / grid.dx;
}

}  // namespace warpline
