#include "warpline/ladder.hpp"

#include "warpline/errors.hpp"

#include <cmath>
#include <string>

namespace warpline {

namespace {

constexpr double kSingularCos = 1e-9;

double inductance_for(double base, double theta, std::size_t cell, double time) {
    const double c = std::abs(std::cos(theta));
    if (c < kSingularCos) throw SingularInductance(cell, time);
    return base / c;
}

}  // namespace

std::vector<double> LadderState::currents() const {
    std::vector<double> out(branch_flux.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = branch_flux[i] / cell_inductance[i];
    return out;
}

double LadderState::energy() const {
    double magnetic = 0.0;
    for (std::size_t i = 0; i < branch_flux.size(); ++i)
        magnetic += branch_flux[i] * branch_flux[i] / cell_inductance[i];
    double electric = 0.0;
    for (std::size_t i = 0; i < voltages.size(); ++i)
        electric += previous_voltages[i] * voltages[i];
    return 0.5 * magnetic + 0.5 * cell_capacitance * electric;
}

LadderState make_ladder(std::size_t n_cells, double pitch, double c0, double origin,
                        LadderEnds ends) {
    if (n_cells < 2) throw DomainError("ladder: need at least two cells");
    if (!(pitch > 0.0) || !(c0 > 0.0)) throw DomainError("ladder: pitch and c0 must be > 0");
    LadderState s;
    s.pitch = pitch;
    s.origin = origin;
    // L0 = C = pitch/c0 gives sqrt(L0 C) = pitch/c0 and sqrt(L0/C) = 1.
    s.base_inductance = pitch / c0;
    s.cell_capacitance = pitch / c0;
    s.voltages.assign(n_cells + 1, 0.0);
    s.previous_voltages.assign(n_cells + 1, 0.0);
    s.branch_flux.assign(n_cells, 0.0);
    s.cell_inductance.assign(n_cells, s.base_inductance);
    s.shunt_conductance.assign(n_cells + 1, 0.0);

    const double length = pitch * static_cast<double>(n_cells);
    const double layer = ends.sponge_fraction * length;
    if (layer > 0.0 && (ends.absorbing_left || ends.absorbing_right)) {
        const double peak = s.cell_capacitance * 8.0 * c0 / layer;
        for (std::size_t i = 0; i <= n_cells; ++i) {
            const double x = pitch * static_cast<double>(i);
            double depth = 0.0;
            if (ends.absorbing_left && x < layer) depth = (layer - x) / layer;
            if (ends.absorbing_right && x > length - layer)
                depth = std::max(depth, (x - (length - layer)) / layer);
            s.shunt_conductance[i] = peak * depth * depth;
        }
    }
    return s;
}

double ladder_dt_limit(const LadderState& state) {
    return std::sqrt(state.base_inductance * state.cell_capacitance);
}

void set_cell_flux(LadderState& state, std::span<const double> theta_total) {
    if (theta_total.size() != state.n_cells())
        throw DomainError("ladder: flux vector length does not match the cell count");
    for (std::size_t i = 0; i < theta_total.size(); ++i)
        state.cell_inductance[i] =
            inductance_for(state.base_inductance, theta_total[i], i, state.time);
}

void launch_ladder_pulse(LadderState& state, std::span<const double> theta_total, double center,
                         double width, int direction, double dt) {
    if (!(width > 0.0)) throw DomainError("ladder pulse width must be > 0");
    if (direction != 1 && direction != -1) throw DomainError("ladder pulse direction must be ±1");
    set_cell_flux(state, theta_total);
    auto g = [&](double x) {
        const double s = (x - center) / width;
        return std::exp(-0.5 * s * s);
    };
    const double C = state.cell_capacitance;
    for (std::size_t i = 0; i < state.voltages.size(); ++i) {
        state.voltages[i] = g(state.node_position(i));
        state.previous_voltages[i] = state.voltages[i];
    }
    for (std::size_t i = 0; i < state.n_cells(); ++i) {
        const double L = state.cell_inductance[i];
        const double z = std::sqrt(L / C);
        const double c = state.pitch / std::sqrt(L * C);
        const double x_mid = state.node_position(i) + 0.5 * state.pitch;
        const double v = g(x_mid + direction * c * 0.5 * dt);
        state.branch_flux[i] = L * direction * v / z;
    }
}

void ladder_step(LadderState& state, std::span<const double> theta_midstep, double dt) {
    const std::size_t n = state.n_cells();
    if (!(dt > 0.0) || !(dt < ladder_dt_limit(state)))
        throw StabilityViolation("ladder_step: dt=" + std::to_string(dt) +
                                 " must lie below sqrt(L_min C)=" +
                                 std::to_string(ladder_dt_limit(state)));
    if (theta_midstep.size() != n)
        throw DomainError("ladder_step: flux vector length does not match the cell count");

    const double t_mid = state.time + 0.5 * dt;
    for (std::size_t i = 0; i < n; ++i) {
        state.branch_flux[i] += dt * (state.voltages[i] - state.voltages[i + 1]);
        state.cell_inductance[i] =
            inductance_for(state.base_inductance, theta_midstep[i], i, t_mid);
    }

    const double C = state.cell_capacitance;
    state.previous_voltages = state.voltages;
    for (std::size_t i = 0; i <= n; ++i) {
        const double in = i > 0 ? state.branch_flux[i - 1] / state.cell_inductance[i - 1] : 0.0;
        const double out = i < n ? state.branch_flux[i] / state.cell_inductance[i] : 0.0;
        const double g = 0.5 * state.shunt_conductance[i];
        state.voltages[i] =
            ((C / dt - g) * state.previous_voltages[i] + (in - out)) / (C / dt + g);
    }
    state.time += dt;
}

}  // namespace warpline
