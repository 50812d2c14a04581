#pragma once

// =============================================================================
// Continuum variable-speed wave solver
// =============================================================================
// Leapfrog scheme for  d²psi/dt² = d/dr ( c²(r,t) d psi/dr )  on a uniform
// node grid. c² is sampled at nodes and averaged onto cell faces. The
// flux-conservative form makes the discrete front speed track the local c
// and gives an exactly conserved discrete energy for static c.
// =============================================================================

#include "warpline/flux.hpp"
#include "warpline/metric.hpp"

#include <functional>
#include <vector>

namespace warpline {

/// c²(r,t) in lab units together with a bound on sup c over the run.
struct SpeedSquaredField {
    std::function<double(double r, double t)> speed_sq;
    bool time_dependent = false;
    double c_max = 1.0;
};

/// c² = background_c²·c̃²(r,t), straight from the metric. Negative c̃²
/// is rejected at evaluation.
[[nodiscard]] SpeedSquaredField field_from_profile(const SpeedProfile& profile,
                                                   double background_c, const Interval& window);

/// c² = c0²|cos theta_total(r,t)| with theta_total synthesized pointwise from
/// the profile and DC bias, i.e. the speed the SQUID array would produce.
[[nodiscard]] SpeedSquaredField field_from_flux(const SpeedProfile& profile, FluxAngle theta_dc,
                                                double c0, const Interval& window);

enum class Boundary { absorbing_sponge, reflecting };

struct ContinuumGrid {
    std::size_t n_points = 0;
    double origin = 0.0;
    double dx = 0.0;
    double dt = 0.0;
    double cfl_factor = 0.5;
    Boundary left = Boundary::reflecting;
    Boundary right = Boundary::absorbing_sponge;
    double sponge_fraction = 0.1;

    [[nodiscard]] double position(std::size_t j) const { return origin + dx * static_cast<double>(j); }
    [[nodiscard]] Interval extent() const { return {origin, position(n_points - 1)}; }
};

/// Node grid covering `window` with spacing ~dx and dt = cfl·dx/c_max.
[[nodiscard]] ContinuumGrid make_continuum_grid(const Interval& window, double dx,
                                                const SpeedSquaredField& field,
                                                double cfl_factor = 0.5);

/// Field at two time levels: `current` at `time`, `previous` at time - dt.
struct ContinuumState {
    std::vector<double> previous;
    std::vector<double> current;
    double time = 0.0;
};

/// Gaussian of the given width centred at `center`, launched one-way in
/// `direction` using the local speed at t = t0.
[[nodiscard]] ContinuumState launch_pulse(const ContinuumGrid& grid, const SpeedSquaredField& field,
                                          double center, double width, int direction,
                                          double t0 = 0.0);

/// Scratch buffers reused across steps.
struct ContinuumWorkspace {
    std::vector<double> face_speed_sq;
    std::vector<double> damping;
    std::vector<double> next;
};

/// Advances `state` by one leapfrog step. Throws CflViolation if the sampled
/// speed exceeds the bound the grid's dt was built from.
void fdtd_step(ContinuumState& state, const SpeedSquaredField& field, const ContinuumGrid& grid,
               ContinuumWorkspace& workspace);

/// Discrete energy between the two stored levels:
/// ½Σ((cur-prev)/dt)²dx + ½Σ_f c²_f Δcur·Δprev/dx. Conserved exactly for static
/// c with reflecting ends.
[[nodiscard]] double continuum_energy(const ContinuumState& state, const SpeedSquaredField& field,
                                      const ContinuumGrid& grid);

}  // namespace warpline
