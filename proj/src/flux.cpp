#include "warpline/flux.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace warpline {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

bool FluxAngle::in_window(double epsilon) const {
    return std::abs(radians_) <= kHalfPi - epsilon;
}

void ArrayConfig::validate() const {
    if (n_cells < 2) throw DomainError("array: n_cells must be >= 2");
    if (!(cell_pitch > 0.0)) throw DomainError("array: cell_pitch must be > 0");
    if (!(c0 > 0.0)) throw DomainError("array: c0 must be > 0");
    if (!(impedance_margin > 0.0 && impedance_margin < kHalfPi))
        throw DomainError("array: impedance_margin must lie in (0, pi/2)");
    if (!(window_epsilon >= 0.0 && window_epsilon < impedance_margin))
        throw DomainError("array: window_epsilon must lie in [0, impedance_margin)");
}

double speed_sq_from_flux(FluxAngle theta_total, double c0) {
    return c0 * c0 * std::abs(std::cos(theta_total.radians()));
}

FluxAngle dc_calibration(double c_over_c0_sq, int sign) {
    if (!(c_over_c0_sq > 0.0 && c_over_c0_sq <= 1.0))
        throw DomainError("dc_calibration: c²/c0² must lie in (0, 1]");
    if (sign != 1 && sign != -1) throw DomainError("dc_calibration: sign must be ±1");
    return FluxAngle(sign * std::acos(c_over_c0_sq));
}

double background_speed(FluxAngle theta_dc, double c0) {
    return std::sqrt(speed_sq_from_flux(theta_dc, c0));
}

double ctilde_sq_product_form(FluxAngle theta_dc, FluxAngle theta_ac) {
    const double ac = theta_ac.radians();
    return std::abs(std::cos(ac) - std::tan(theta_dc.radians()) * std::sin(ac));
}

double ctilde_sq_secant_form(FluxAngle theta_dc, FluxAngle theta_ac) {
    const double dc = theta_dc.radians();
    return std::abs(1.0 / std::cos(dc)) * std::abs(std::cos(dc + theta_ac.radians()));
}

double recover_ctilde_sq(FluxAngle theta_total, FluxAngle theta_dc) {
    return std::cos(theta_total.radians()) / std::cos(theta_dc.radians());
}

SynthesisAttempt attempt_synthesis(double ctilde_sq, FluxAngle theta_dc, double window_epsilon) {
    if (ctilde_sq < 0.0) return {FluxStatus::negative_ctilde, kNaN};
    if (ctilde_sq == 1.0) {
        // arccos(cos x) = |x| exactly; avoids spurious AC drive in flat regions.
        const double total = std::abs(theta_dc.radians());
        if (total > kHalfPi - window_epsilon) return {FluxStatus::window_violation, total};
        return {FluxStatus::feasible, total};
    }
    double arg = ctilde_sq * std::cos(theta_dc.radians());
    if (arg > 1.0) {
        if (arg > 1.0 + kArccosSlack) return {FluxStatus::arccos_infeasible, kNaN};
        arg = 1.0;
    }
    const double total = std::acos(arg);
    if (total > kHalfPi - window_epsilon || !theta_dc.in_window(window_epsilon))
        return {FluxStatus::window_violation, total};
    return {FluxStatus::feasible, total};
}

FluxPair synthesize_flux(double ctilde_sq, FluxAngle theta_dc, double window_epsilon) {
    if (!std::isfinite(ctilde_sq)) throw DomainError("synthesize_flux: c̃² must be finite");
    if (!(std::abs(theta_dc.radians()) < kHalfPi))
        throw DomainError("synthesize_flux: |theta_dc| must be < pi/2");
    const SynthesisAttempt attempt = attempt_synthesis(ctilde_sq, theta_dc, window_epsilon);
    switch (attempt.status) {
        case FluxStatus::negative_ctilde:
            throw SynthesisError(attempt.status,
                                 "c̃²=" + std::to_string(ctilde_sq) + " is negative");
        case FluxStatus::arccos_infeasible:
            throw SynthesisError(attempt.status, "arccos argument c̃²·cos(theta_dc) exceeds 1");
        case FluxStatus::window_violation:
            throw SynthesisError(attempt.status, "total flux reaches the pi/2 window");
        default: break;
    }
    // Re-forming the total from the split keeps total == dc + ac bit-exact.
    const FluxAngle ac = FluxAngle(attempt.theta_total) - theta_dc;
    return {ac, theta_dc + ac};
}

FluxAngle dc_feasibility_boundary(double ctilde_sq_max) {
    if (!(ctilde_sq_max >= 1.0))
        throw DomainError("dc_feasibility_boundary: c̃²_max must be >= 1");
    return FluxAngle(std::acos(1.0 / ctilde_sq_max));
}

double godel_max_radius(FluxAngle theta_dc) {
    const double dc = std::abs(theta_dc.radians());
    if (!(dc < kHalfPi)) throw DomainError("godel_max_radius: |theta_dc| must be < pi/2");
    if (dc == 0.0) return 0.0;
    return std::sqrt(1.0 / std::cos(dc) - 1.0);
}

PointClassification classify_point(double ctilde_sq, FluxAngle theta_dc,
                                   const ArrayConfig& config) {
    const SynthesisAttempt attempt =
        attempt_synthesis(ctilde_sq, theta_dc, config.window_epsilon);
    if (attempt.status != FluxStatus::feasible) return {attempt.status, attempt.theta_total};
    if (std::abs(attempt.theta_total) > config.impedance_margin)
        return {FluxStatus::impedance_warning, attempt.theta_total};
    return {FluxStatus::feasible, attempt.theta_total};
}

}  // namespace warpline
