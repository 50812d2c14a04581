#pragma once

// =============================================================================
// Flux-tunable LC ladder
// =============================================================================
// n cells, n+1 nodes. Cell i is the SQUID inductor L_i = L0/|cos theta_i(t)|
// between nodes i and i+1; every node carries a shunt capacitor C to ground.
// Unit-cell normalisation: L0·C = (pitch/c0)², characteristic impedance
// sqrt(L0/C) = 1, so a uniform unbiased line carries signals at c0.
//
// Leapfrog with staggered levels: voltages at t, branch fluxes Phi_i = L_i I_i
// at t + dt/2. Using Phi (not L·dI/dt) keeps the update well defined when
// L_i changes in time.
// =============================================================================

#include "warpline/metric.hpp"

#include <span>
#include <vector>

namespace warpline {

struct LadderState {
    std::vector<double> voltages;           // per node, at `time`
    std::vector<double> previous_voltages;  // per node, at `time - dt`
    std::vector<double> branch_flux;        // per cell, at `time - dt/2`
    std::vector<double> cell_inductance;    // per cell, L_i at `time - dt/2`
    std::vector<double> shunt_conductance;  // per node; non-zero inside sponges
    double cell_capacitance = 1.0;
    double base_inductance = 1.0;
    double pitch = 1.0;
    double origin = 0.0;  // position of node 0
    double time = 0.0;

    [[nodiscard]] std::size_t n_cells() const { return branch_flux.size(); }
    [[nodiscard]] double node_position(std::size_t i) const {
        return origin + pitch * static_cast<double>(i);
    }
    [[nodiscard]] std::vector<double> currents() const;

    /// ½ΣΦ²/L + ½C Σ V_prev·V, exactly conserved by a step with static
    /// inductances and no sponge. Valid after at least one step.
    [[nodiscard]] double energy() const;
};

struct LadderEnds {
    bool absorbing_left = false;
    bool absorbing_right = false;
    double sponge_fraction = 0.1;
};

/// Quiescent ladder of `n_cells` cells starting at `origin`.
[[nodiscard]] LadderState make_ladder(std::size_t n_cells, double pitch, double c0,
                                      double origin = 0.0, LadderEnds ends = {});

/// Stability bound sqrt(L_min·C) with L_min = L0 (theta = 0).
[[nodiscard]] double ladder_dt_limit(const LadderState& state);

/// Inductances for the given cell fluxes; throws SingularInductance where
/// |cos theta| < 1e-9.
void set_cell_flux(LadderState& state, std::span<const double> theta_total);

/// Loads a one-way Gaussian voltage pulse. `theta_total` gives the initial
/// cell fluxes, which also set the local impedance of the launch.
void launch_ladder_pulse(LadderState& state, std::span<const double> theta_total, double center,
                         double width, int direction, double dt);

/// One leapfrog step. `theta_midstep` are the cell fluxes at time + dt/2.
void ladder_step(LadderState& state, std::span<const double> theta_midstep, double dt);

}  // namespace warpline
