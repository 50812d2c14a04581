#include "warpline/errors.hpp"
#include "warpline/metric.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace warpline;

namespace {

// Direct-substitution oracles in long double, written from the line elements
// rather than from the library code.
long double alcubierre_oracle(long double x, long double t, long double vs, long double R,
                              long double sigma, long double xs0) {
    const long double rs = std::fabs(x - (xs0 + vs * t));
    const long double f =
        (std::tanh(sigma * (rs + R)) - std::tanh(sigma * (rs - R))) / (2 * std::tanh(sigma * R));
    return (1 + vs * f) * (1 + vs * f);
}

long double kerr_oracle(long double r, long double M, long double theta) {
    const long double sigma = r * r + M * M * std::cos(theta) * std::cos(theta);
    return (sigma - 2 * M * r) * (M - r) * (M - r) / (sigma * sigma);
}

double rel(double got, long double want) {
    const long double scale = std::max<long double>(std::fabs(want), 1e-300L);
    return static_cast<double>(std::fabs(static_cast<long double>(got) - want) / scale);
}

}  // namespace

TEST(ShapeFunction, InteriorWallAndFarField) {
    AlcubierreParams p{.vs_over_c = 1.0, .bubble_radius = 1.0, .sigma = 20.0};
    EXPECT_NEAR(shape_function(0.0, p), 1.0, 1e-15);
    // σR = 20: tanh(40)/(2 tanh 20) = 0.5 + 4.2e-18.
    EXPECT_NEAR(shape_function(1.0, p), 0.5, 1e-15);
    EXPECT_NEAR(shape_function(50.0, p), 0.0, 1e-15);
}

TEST(ShapeFunction, FrozenSmoothValues) {
    AlcubierreParams p{.vs_over_c = 1.0, .bubble_radius = 1.0, .sigma = 8.0};
    EXPECT_NEAR(shape_function(0.9, p), 0.832018572396551510809, 1e-14);
    EXPECT_NEAR(shape_function(1.2, p), 0.039165731611807750321, 1e-14);
}

TEST(ShapeFunction, TopHatIsExactStep) {
    AlcubierreParams p{.vs_over_c = 1.0, .bubble_radius = 2.0, .top_hat = true};
    EXPECT_EQ(shape_function(2.0, p), 1.0);
    EXPECT_EQ(shape_function(std::nextafter(2.0, 3.0), p), 0.0);
}

TEST(ShapeFunction, RejectsNegativeDistance) {
    EXPECT_THROW((void)shape_function(-0.1, AlcubierreParams{}), DomainError);
}

TEST(AlcubierreProfile, ReferenceValues) {
    AlcubierreParams p{.vs_over_c = 1.5, .bubble_radius = 1.0, .x_s0 = 2.0, .top_hat = true};
    EXPECT_DOUBLE_EQ(ctilde_sq_alcubierre(2.0, 0.0, p), 6.25);
    EXPECT_DOUBLE_EQ(ctilde_sq_alcubierre(10.0, 0.0, p), 1.0);
    p.vs_over_c = 0.5;
    EXPECT_DOUBLE_EQ(ctilde_sq_alcubierre(2.0, 0.0, p), 2.25);
}

TEST(AlcubierreProfile, BubbleMovesAtVsTimesLightSpeed) {
    AlcubierreParams p{.vs_over_c = 1.5, .x_s0 = 1.0, .light_speed = 0.4};
    EXPECT_DOUBLE_EQ(bubble_center(2.0, p), 1.0 + 1.5 * 0.4 * 2.0);
    const auto profile = SpeedProfile::alcubierre(p);
    EXPECT_TRUE(profile.time_dependent());
    EXPECT_NEAR(profile.ctilde_sq(bubble_center(2.0, p), 2.0), 6.25, 1e-9);
}

TEST(AlcubierreProfile, ZeroVelocityIsFlat) {
    AlcubierreParams p{.vs_over_c = 0.0, .sigma = 3.0};
    for (double x = -5.0; x <= 5.0; x += 0.25)
        for (double t : {0.0, 1.0, 7.5}) EXPECT_EQ(ctilde_sq_alcubierre(x, t, p), 1.0);
}

TEST(AlcubierreProfile, MatchesDirectSubstitutionOnGrid) {
    AlcubierreParams p{.vs_over_c = 1.3, .bubble_radius = 0.8, .sigma = 4.0, .x_s0 = -0.5};
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double x = -4.0 + 8.0 * i / 999.0;
        const double t = 0.37;
        worst = std::max(worst, rel(ctilde_sq_alcubierre(x, t, p),
                                    alcubierre_oracle(x, t, 1.3L, 0.8L, 4.0L, -0.5L)));
    }
    EXPECT_LT(worst, 1e-12);
}

TEST(AlcubierreProfile, SmoothConvergesToTopHat) {
    // Pointwise away from the wall itself, where the step is undefined.
    double previous = std::numeric_limits<double>::infinity();
    for (double sigma_r : {5.0, 20.0, 80.0}) {
        AlcubierreParams smooth{.vs_over_c = 1.0, .bubble_radius = 1.0, .sigma = sigma_r};
        AlcubierreParams hat = smooth;
        hat.top_hat = true;
        double worst = 0.0;
        for (int i = 0; i <= 400; ++i) {
            const double x = -3.0 + 6.0 * i / 400.0;
            if (std::abs(std::abs(x) - 1.0) < 0.05) continue;
            worst = std::max(worst, std::abs(ctilde_sq_alcubierre(x, 0.0, smooth) -
                                             ctilde_sq_alcubierre(x, 0.0, hat)));
        }
        EXPECT_LT(worst, previous) << "sigma R = " << sigma_r;
        previous = worst;
    }
    // Worst point sits 0.05R from the wall: 1 - tanh(80 · 0.05) ≈ 6.7e-4.
    EXPECT_LT(previous, 1e-3);
}

TEST(AlcubierreParams, Validation) {
    EXPECT_THROW(AlcubierreParams{.bubble_radius = 0.0}.validate(), DomainError);
    EXPECT_THROW(AlcubierreParams{.vs_over_c = -0.1}.validate(), DomainError);
    EXPECT_THROW(AlcubierreParams{.sigma = 0.0}.validate(), DomainError);
    EXPECT_NO_THROW((AlcubierreParams{.sigma = 0.0, .top_hat = true}.validate()));
}

TEST(GodelProfile, ReferenceValues) {
    GodelParams p{.a = 1.0};
    EXPECT_DOUBLE_EQ(ctilde_sq_godel(0.0, p), 1.0);
    EXPECT_DOUBLE_EQ(ctilde_sq_godel(2.0, p), 2.0);
    EXPECT_DOUBLE_EQ(ctilde_sq_godel(4.0, p), 5.0);
    EXPECT_THROW(GodelParams{.a = 0.0}.validate(), DomainError);
}

TEST(GodelProfile, MatchesDirectSubstitutionOnGrid) {
    const double a = 0.7;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const long double r = 6.0L * i / 999.0L;
        const long double u = r / (2 * 0.7L);
        worst = std::max(worst, rel(ctilde_sq_godel(static_cast<double>(r), {a}), 1 + u * u));
    }
    EXPECT_LT(worst, 1e-12);
}

TEST(KerrProfile, ReferenceValues) {
    EXPECT_EQ(ctilde_sq_kerr_extreme(1.0, {1.0, 0.0}), 0.0);
    EXPECT_EQ(ctilde_sq_kerr_extreme(1.0, {1.0, 0.7}), 0.0);
    EXPECT_NEAR(ctilde_sq_kerr_extreme(3.0, {1.0, 0.0}), 0.16, 1e-15);
    // (1 - 2/1.5)·0.25/2.25 = -1/27.
    EXPECT_NEAR(ctilde_sq_kerr_extreme(1.5, {1.0, std::numbers::pi / 2}), -1.0 / 27.0, 1e-15);
}

TEST(KerrProfile, MatchesDirectSubstitutionOnGrid) {
    for (double theta : {0.0, std::numbers::pi / 4, 1.2, std::numbers::pi / 2}) {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double r = 0.01 + 4.0 * i / 999.0;
            const long double want = kerr_oracle(r, 1.3L, theta);
            if (std::fabs(want) < 1e-12L) continue;  // relative error meaningless at roots
            worst = std::max(worst, rel(ctilde_sq_kerr_extreme(r, {1.3, theta}), want));
        }
        EXPECT_LT(worst, 1e-12) << "theta = " << theta;
    }
}

TEST(KerrProfile, EquatorialSliceUnboundedAtOriginThrows) {
    const auto profile = SpeedProfile::kerr_extreme({1.0, std::numbers::pi / 2});
    EXPECT_THROW((void)profile.ctilde_sq(0.0), DomainError);
}

TEST(KerrProfile, PolarSliceBetweenZeroAndOne) {
    const KerrExtremeParams p{1.0, 0.0};
    EXPECT_DOUBLE_EQ(ctilde_sq_kerr_extreme(0.0, p), 1.0);
    for (int i = 1; i <= 2000; ++i) {
        const double r = 0.005 * i;
        const double v = ctilde_sq_kerr_extreme(r, p);
        EXPECT_GE(v, 0.0);
        EXPECT_LT(v, 1.0);
    }
    EXPECT_GT(ctilde_sq_kerr_extreme(1e4, p), 0.999);
}

TEST(KerrProfile, ThetaRange) {
    EXPECT_THROW((KerrExtremeParams{1.0, -0.1}.validate()), DomainError);
    EXPECT_THROW((KerrExtremeParams{1.0, 1.6}.validate()), DomainError);
    EXPECT_THROW((KerrExtremeParams{0.0, 0.0}.validate()), DomainError);
}

TEST(SpeedProfile, FlatIsOneAndStatic) {
    const auto flat = SpeedProfile::flat();
    EXPECT_FALSE(flat.time_dependent());
    EXPECT_EQ(flat.ctilde_sq(-3.0, 2.0), 1.0);
    EXPECT_EQ(flat.max_ctilde_sq({0.0, 1.0}), 1.0);
}

TEST(SpeedProfile, RangeEnforced) {
    const auto kerr = SpeedProfile::kerr_extreme({});
    EXPECT_THROW((void)kerr.ctilde_sq(-0.5), DomainError);
    const auto narrow = SpeedProfile::godel({}).with_range({0.0, 2.0});
    EXPECT_THROW((void)narrow.ctilde_sq(2.5), DomainError);
    EXPECT_THROW((void)kerr.with_range({-1.0, 2.0}), DomainError);
}

TEST(SpeedProfile, MaxCtildeSq) {
    const auto alc = SpeedProfile::alcubierre({.vs_over_c = 1.5, .top_hat = true});
    EXPECT_DOUBLE_EQ(alc.max_ctilde_sq({0.0, 8.0}), 6.25);
    const auto godel = SpeedProfile::godel({1.0});
    EXPECT_DOUBLE_EQ(godel.max_ctilde_sq({-1.0, 3.0}), 1.0 + 1.5 * 1.5);
    const auto kerr = SpeedProfile::kerr_extreme({1.0, 0.0});
    EXPECT_DOUBLE_EQ(kerr.max_ctilde_sq({0.0, 4.0}), 1.0);
}

TEST(TabulatedProfile, InterpolatesAndReadsCsv) {
    std::istringstream in("# comment\nr,ctilde_sq\n0,1\n1,3\n\n2,2\n");
    const auto table = TabulatedProfile::from_csv(in);
    EXPECT_EQ(table.coords().size(), 3u);
    EXPECT_DOUBLE_EQ(table(0.5), 2.0);
    EXPECT_DOUBLE_EQ(table(1.5), 2.5);
    EXPECT_THROW((void)table(2.5), DomainError);
    const auto profile = SpeedProfile::tabulated(table);
    EXPECT_DOUBLE_EQ(profile.max_ctilde_sq({0.0, 2.0}), 3.0);
}

TEST(TabulatedProfile, RejectsBadInput) {
    EXPECT_THROW(TabulatedProfile({0.0, 0.0}, {1.0, 1.0}), DomainError);
    EXPECT_THROW(TabulatedProfile({0.0}, {1.0}), DomainError);
    EXPECT_THROW(TabulatedProfile({0.0, 1.0}, {1.0}), DomainError);
}

TEST(Ricci, FlatIsZero) {
    EXPECT_NEAR(ricci_scalar(SpeedProfile::flat(), 1.0, 0.3, 0.0), 0.0, 1e-12);
}

TEST(Ricci, GodelMatchesClosedFormWithSecondOrderConvergence) {
    const double a = 1.0;
    const auto profile = SpeedProfile::godel({a});
    auto exact = [&](double r) {
        const double u = r / (2 * a);
        return -1.0 / (2 * a * a) / ((1 + u * u) * (1 + u * u));
    };
    EXPECT_NEAR(ricci_scalar(profile, 1.0, 0.0, 0.0), -0.5, 1e-6);
    EXPECT_NEAR(ricci_scalar(profile, 1.0, 2.0, 0.0), -0.125, 1e-6);
    for (double r : {0.0, 0.7, 2.0}) {
        const double e1 = std::abs(ricci_scalar(profile, 1.0, r, 0.0, 0.04) - exact(r));
        const double e2 = std::abs(ricci_scalar(profile, 1.0, r, 0.0, 0.02) - exact(r));
        EXPECT_NEAR(e1 / e2, 4.0, 0.1) << "r = " << r;
    }
}

TEST(Ricci, BackgroundSpeedDoesNotChangeCurvature) {
    const auto profile = SpeedProfile::godel({1.0});
    // Equal up to the rounding floor of the default step, ~eps/h².
    EXPECT_NEAR(ricci_scalar(profile, 0.4, 1.0, 0.0), ricci_scalar(profile, 1.0, 1.0, 0.0), 1e-7);
}

TEST(Ricci, StencilErrors) {
    const auto kerr = SpeedProfile::kerr_extreme({1.0, 0.0});
    EXPECT_THROW((void)ricci_scalar(kerr, 1.0, 0.0, 0.0, 0.01), DomainError);
    EXPECT_THROW((void)ricci_scalar(kerr, 1.0, 1.0, 0.0, 0.01), EvaluationError);
}
