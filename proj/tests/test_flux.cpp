#include "warpline/errors.hpp"
#include "warpline/flux.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace warpline;

namespace {
constexpr double pi = std::numbers::pi;

// Oracles evaluated with mpmath at 30 digits.
constexpr double kCos044Pi = 0.18738131458572463;
constexpr double kBoundaryHalf = 1.1102423351135742;      // arccos(1/2.25)
constexpr double kBoundaryOne = 1.318116071652818;        // arccos(1/4)
constexpr double kBoundaryThreeHalves = 1.410105673842986;  // arccos(1/6.25)
}  // namespace

TEST(FluxAngle, Conversions) {
    const auto a = FluxAngle::from_flux_quanta(0.25);
    EXPECT_DOUBLE_EQ(a.radians(), pi / 4);
    EXPECT_DOUBLE_EQ(a.over_pi(), 0.25);
    EXPECT_DOUBLE_EQ(FluxAngle::from_pi_units(-0.44).radians(), -0.44 * pi);
    EXPECT_TRUE(FluxAngle(pi / 2).in_window());
    EXPECT_FALSE(FluxAngle(pi / 2).in_window(1e-9));
    EXPECT_EQ((FluxAngle(0.3) + FluxAngle(0.2)).radians(), 0.5);
}

TEST(SpeedFromFlux, ReferenceValues) {
    EXPECT_DOUBLE_EQ(speed_sq_from_flux(FluxAngle(0.0), 1.0), 1.0);
    EXPECT_NEAR(speed_sq_from_flux(FluxAngle(pi / 3), 1.0), 0.5, 1e-15);
    EXPECT_NEAR(speed_sq_from_flux(FluxAngle::from_pi_units(0.44), 1.0), kCos044Pi, 1e-15);
    EXPECT_NEAR(speed_sq_from_flux(FluxAngle(2 * pi / 3), 2.0), 2.0, 1e-14);
}

TEST(DcCalibration, ReferenceValues) {
    EXPECT_EQ(dc_calibration(1.0).radians(), 0.0);
    EXPECT_NEAR(dc_calibration(0.5).radians(), pi / 3, 1e-15);
    EXPECT_NEAR(dc_calibration(kCos044Pi, -1).over_pi(), -0.44, 1e-12);
    EXPECT_THROW((void)dc_calibration(0.0), DomainError);
    EXPECT_THROW((void)dc_calibration(1.1), DomainError);
    EXPECT_THROW((void)dc_calibration(0.5, 0), DomainError);
}

TEST(CtildeForms, ProductAndSecantAgreeOnRandomPairs) {
    std::mt19937_64 rng(20260916);
    std::uniform_real_distribution<double> angle(-pi / 2 + 1e-3, pi / 2 - 1e-3);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const FluxAngle dc(angle(rng)), ac(angle(rng));
        if (!(dc + ac).in_window()) continue;
        worst = std::max(worst, std::abs(ctilde_sq_product_form(dc, ac) -
                                         ctilde_sq_secant_form(dc, ac)));
    }
    EXPECT_LT(worst, 1e-12);
}

TEST(SynthesizeFlux, ReferenceValues) {
    auto flat = synthesize_flux(1.0, FluxAngle(0.0));
    EXPECT_EQ(flat.ac.radians(), 0.0);
    EXPECT_EQ(flat.total.radians(), 0.0);

    auto p = synthesize_flux(2.0, FluxAngle(-pi / 3));
    EXPECT_NEAR(p.total.radians(), 0.0, 2e-8);  // arccos near 1 amplifies rounding
    EXPECT_NEAR(p.ac.radians(), pi / 3, 2e-8);

    try {
        (void)synthesize_flux(2.0, FluxAngle(0.0));
        FAIL() << "expected SynthesisError";
    } catch (const SynthesisError& e) {
        EXPECT_EQ(e.status(), FluxStatus::arccos_infeasible);
    }
    try {
        (void)synthesize_flux(-0.1, FluxAngle(0.0));
        FAIL() << "expected SynthesisError";
    } catch (const SynthesisError& e) {
        EXPECT_EQ(e.status(), FluxStatus::negative_ctilde);
    }
    EXPECT_THROW((void)synthesize_flux(1.0, FluxAngle(pi / 2)), DomainError);
}

TEST(SynthesizeFlux, TotalIsDcPlusAcExactly) {
    const FluxAngle dc = FluxAngle::from_pi_units(0.3);
    const auto p = synthesize_flux(1.4, dc);
    EXPECT_EQ((dc + p.ac).radians(), p.total.radians());
}

TEST(SynthesizeFlux, FlatNeedsNoAcForNonNegativeDc) {
    for (int i = 0; i < 200; ++i) {
        const FluxAngle dc(0.49 * pi * i / 199.0);
        EXPECT_NEAR(synthesize_flux(1.0, dc).ac.radians(), 0.0, 1e-15) << dc.radians();
    }
}

TEST(SynthesizeFlux, RoundTripRecoversRequestedSpeed) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dcs(-0.49 * pi, 0.49 * pi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int checked = 0;
    while (checked < 1000) {
        const FluxAngle dc(dcs(rng));
        const double c2 = unit(rng) / std::cos(dc.radians());  // argument in [0, 1]
        const auto attempt = attempt_synthesis(c2, dc);
        if (attempt.status != FluxStatus::feasible) continue;
        const auto pair = synthesize_flux(c2, dc);
        const double bg2 = speed_sq_from_flux(dc, 1.0);
        const double recovered = bg2 * recover_ctilde_sq(pair.total, dc);
        EXPECT_NEAR(recovered, bg2 * c2, 1e-10 * bg2 * c2 + 1e-300);
        ++checked;
    }
}

TEST(SynthesizeFlux, TotalDecreasesWithCtilde) {
    const FluxAngle dc = FluxAngle::from_pi_units(0.4);
    double previous = pi;
    const double c2_top = 1.0 / std::cos(dc.radians());
    for (int i = 0; i <= 100; ++i) {
        const double c2 = c2_top * i / 100.0;
        const auto a = attempt_synthesis(c2, dc, 0.0);
        ASSERT_EQ(a.status, FluxStatus::feasible) << c2;
        if (i > 0) EXPECT_LT(a.theta_total, previous);
        previous = a.theta_total;
    }
    EXPECT_NEAR(previous, 0.0, 2e-8);
}

TEST(AttemptSynthesis, StatusPrecedence) {
    EXPECT_EQ(attempt_synthesis(-1.0, FluxAngle(0.0)).status, FluxStatus::negative_ctilde);
    EXPECT_TRUE(std::isnan(attempt_synthesis(-1.0, FluxAngle(0.0)).theta_total));
    EXPECT_EQ(attempt_synthesis(3.0, FluxAngle(0.1)).status, FluxStatus::arccos_infeasible);
    EXPECT_EQ(attempt_synthesis(0.0, FluxAngle(0.0)).status, FluxStatus::window_violation);
    EXPECT_EQ(attempt_synthesis(0.5, FluxAngle(pi / 2)).status, FluxStatus::window_violation);
    EXPECT_EQ(attempt_synthesis(0.5, FluxAngle(0.0)).status, FluxStatus::feasible);
}

TEST(FeasibilityBoundary, ReferenceValues) {
    EXPECT_NEAR(dc_feasibility_boundary(2.25).radians(), kBoundaryHalf, 1e-12);
    EXPECT_NEAR(dc_feasibility_boundary(4.0).radians(), kBoundaryOne, 1e-12);
    EXPECT_NEAR(dc_feasibility_boundary(6.25).radians(), kBoundaryThreeHalves, 1e-12);
    EXPECT_EQ(dc_feasibility_boundary(1.0).radians(), 0.0);
    EXPECT_THROW((void)dc_feasibility_boundary(0.5), DomainError);
}

TEST(GodelMaxRadius, ReferenceValues) {
    EXPECT_NEAR(godel_max_radius(FluxAngle(pi / 3)), 1.0, 1e-15);
    EXPECT_NEAR(godel_max_radius(FluxAngle::from_pi_units(0.44)), 2.0824772297176406, 1e-12);
    EXPECT_NEAR(godel_max_radius(FluxAngle::from_pi_units(-0.45)), 2.322165631797108, 1e-12);
    EXPECT_EQ(godel_max_radius(FluxAngle(0.0)), 0.0);
    EXPECT_NEAR(godel_max_radius(FluxAngle(1e-4)), 1e-4 / std::sqrt(2.0), 1e-10);
    EXPECT_THROW((void)godel_max_radius(FluxAngle(pi / 2)), DomainError);
}

TEST(ClassifyPoint, ReferenceValues) {
    const ArrayConfig cfg;
    // v_s/c = 1.5 bubble interior at the exact boundary DC bias.
    const FluxAngle boundary(-std::acos(0.16));
    const auto inside = classify_point(6.25, boundary, cfg);
    EXPECT_NE(inside.status, FluxStatus::arccos_infeasible);
    EXPECT_LT(inside.status, FluxStatus::window_violation);
    EXPECT_NEAR(inside.theta_total, 0.0, 2e-6);
    // Rounded-down biases -0.4487π and -0.44π sit just outside the boundary 0.44885π.
    EXPECT_EQ(classify_point(6.25, FluxAngle::from_pi_units(-0.4487), cfg).status,
              FluxStatus::arccos_infeasible);
    EXPECT_EQ(classify_point(6.25, FluxAngle::from_pi_units(-0.44), cfg).status,
              FluxStatus::arccos_infeasible);
    // Negative c̃² outranks everything.
    EXPECT_EQ(classify_point(-1.0 / 27.0, FluxAngle(0.0), cfg).status,
              FluxStatus::negative_ctilde);
    // Horizon: θ_total = π/2 exactly is a hot cell.
    const auto horizon = classify_point(0.0, FluxAngle(0.0), cfg);
    EXPECT_EQ(horizon.status, FluxStatus::window_violation);
    EXPECT_EQ(horizon.theta_total, pi / 2);
    // Between the impedance margin and the window.
    const auto warn = classify_point(std::cos(0.45 * pi), FluxAngle(0.0), cfg);
    EXPECT_EQ(warn.status, FluxStatus::impedance_warning);
    EXPECT_NEAR(warn.theta_total, 0.45 * pi, 1e-12);
}

TEST(ArrayConfig, Validation) {
    EXPECT_NO_THROW(ArrayConfig{}.validate());
    EXPECT_THROW((ArrayConfig{.n_cells = 1}.validate()), DomainError);
    EXPECT_THROW((ArrayConfig{.c0 = 0.0}.validate()), DomainError);
    EXPECT_THROW((ArrayConfig{.impedance_margin = pi / 2}.validate()), DomainError);
}
