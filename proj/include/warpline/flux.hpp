#pragma once

// =============================================================================
// Flux <-> speed algebra for a dc-SQUID array
// =============================================================================
// All fluxes are carried as the angle theta = pi·phi_ext/phi_0 (radians).
// The array speed is c0²|cos theta|; a uniform DC bias sets the simulated
// background speed and the AC part sculpts c̃²(r,t) on top of it.
// =============================================================================

#include "warpline/errors.hpp"

#include <cstddef>
#include <numbers>

namespace warpline {

inline constexpr double kHalfPi = std::numbers::pi / 2;
inline constexpr double kDefaultWindowEpsilon = 1e-9;
inline constexpr double kDefaultImpedanceMargin = 0.44 * std::numbers::pi;

/// Arccos arguments in (1, 1 + kArccosSlack] are treated as 1 so that a DC
/// bias sitting exactly on the analytic boundary is not rejected by rounding.
inline constexpr double kArccosSlack = 1e-12;

class FluxAngle {
public:
    constexpr FluxAngle() = default;
    constexpr explicit FluxAngle(double radians) : radians_(radians) {}

    /// From phi_ext/phi_0.
    static constexpr FluxAngle from_flux_quanta(double phi_over_phi0) {
        return FluxAngle(std::numbers::pi * phi_over_phi0);
    }
    static constexpr FluxAngle from_pi_units(double fraction_of_pi) {
        return FluxAngle(std::numbers::pi * fraction_of_pi);
    }

    [[nodiscard]] constexpr double radians() const { return radians_; }
    [[nodiscard]] constexpr double over_pi() const { return radians_ / std::numbers::pi; }
    /// phi_ext/phi_0, identical to over_pi().
    [[nodiscard]] constexpr double flux_quanta() const { return over_pi(); }

    /// |theta| <= pi/2 - epsilon.
    [[nodiscard]] bool in_window(double epsilon = 0.0) const;

    friend constexpr FluxAngle operator+(FluxAngle a, FluxAngle b) {
        return FluxAngle(a.radians_ + b.radians_);
    }
    friend constexpr FluxAngle operator-(FluxAngle a, FluxAngle b) {
        return FluxAngle(a.radians_ - b.radians_);
    }
    friend constexpr FluxAngle operator-(FluxAngle a) { return FluxAngle(-a.radians_); }
    friend constexpr bool operator==(FluxAngle, FluxAngle) = default;

private:
    double radians_ = 0.0;
};

/// Hardware description of the SQUID array.
struct ArrayConfig {
    std::size_t n_cells = 200;
    double cell_pitch = 1.0;
    double c0 = 1.0;
    double impedance_margin = kDefaultImpedanceMargin;
    std::size_t max_hot_cells = 1;
    double window_epsilon = kDefaultWindowEpsilon;

    void validate() const;
};

/// c0²|cos theta|.
[[nodiscard]] double speed_sq_from_flux(FluxAngle theta_total, double c0);

/// DC bias that reduces c²/c0² to `c_over_c0_sq`: sign·arccos(c_over_c0_sq).
[[nodiscard]] FluxAngle dc_calibration(double c_over_c0_sq, int sign = +1);

/// Background speed of the simulated flat spacetime for a DC bias.
[[nodiscard]] double background_speed(FluxAngle theta_dc, double c0);

/// |cos(ac) - tan(dc)·sin(ac)|, the product form of c̃².
[[nodiscard]] double ctilde_sq_product_form(FluxAngle theta_dc, FluxAngle theta_ac);

/// |sec(dc)|·|cos(dc + ac)|, the secant form of c̃².
[[nodiscard]] double ctilde_sq_secant_form(FluxAngle theta_dc, FluxAngle theta_ac);

/// c̃² realised by a total flux on top of a DC bias: sec(dc)·cos(total).
[[nodiscard]] double recover_ctilde_sq(FluxAngle theta_total, FluxAngle theta_dc);

struct FluxPair {
    FluxAngle ac;
    FluxAngle total;
};

/// Non-throwing synthesis of one point. `theta_total` is NaN when the status
/// is negative_ctilde or arccos_infeasible.
struct SynthesisAttempt {
    FluxStatus status = FluxStatus::feasible;
    double theta_total = 0.0;
};

/// Status precedence negative_ctilde > arccos_infeasible > window_violation.
/// Never returns impedance_warning (that needs an ArrayConfig).
[[nodiscard]] SynthesisAttempt attempt_synthesis(double ctilde_sq, FluxAngle theta_dc,
                                                 double window_epsilon = kDefaultWindowEpsilon);

/// theta_total = arccos(c̃²·cos theta_dc) on the principal branch,
/// theta_ac = theta_total - theta_dc. Requires |theta_dc| < pi/2; throws
/// SynthesisError for negative_ctilde, arccos_infeasible and window_violation.
[[nodiscard]] FluxPair synthesize_flux(double ctilde_sq, FluxAngle theta_dc,
                                       double window_epsilon = kDefaultWindowEpsilon);

/// Smallest |theta_dc| that can realise c̃² = ctilde_sq_max: arccos(1/c̃²_max).
[[nodiscard]] FluxAngle dc_feasibility_boundary(double ctilde_sq_max);

/// Largest r/(2a) of a Gödel section reachable with this DC bias:
/// sqrt(sec|theta_dc| - 1).
[[nodiscard]] double godel_max_radius(FluxAngle theta_dc);

struct PointClassification {
    FluxStatus status = FluxStatus::feasible;
    double theta_total = 0.0;  // NaN where undefined
};

/// Full status chain including the impedance heuristic on |theta_total|.
/// A DC bias outside the open window classifies as window_violation.
[[nodiscard]] PointClassification classify_point(double ctilde_sq, FluxAngle theta_dc,
                                                 const ArrayConfig& config);

}  // namespace warpline
