#include "warpline/config.hpp"
#include "warpline/errors.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace warpline;
using nlohmann::json;

namespace {

std::string error_path(const json& doc) {
    try {
        (void)parse_run_config(doc);
    } catch (const ConfigError& e) {
        return e.path();
    }
    return "<no error>";
}

}  // namespace

TEST(Config, EmptyDocumentGivesFlatDefaults) {
    const auto cfg = parse_run_config(json::object());
    EXPECT_EQ(cfg.metric.profile.kind(), ProfileKind::flat);
    EXPECT_EQ(cfg.synthesis.theta_dc.radians(), 0.0);
    EXPECT_EQ(cfg.output.directory, "out");
    EXPECT_EQ(cfg.hash.size(), 16u);
}

TEST(Config, AllPresetsParse) {
    for (const auto& name : preset_names()) {
        EXPECT_NO_THROW((void)parse_run_config(preset_document(name))) << name;
    }
    EXPECT_THROW((void)preset_document("nope"), ConfigError);
}

TEST(Config, AlcubierrePresetUsesBackgroundLightSpeed) {
    const auto cfg = parse_run_config(preset_document("alcubierre"));
    const auto& p = std::get<AlcubierreParams>(cfg.metric.profile.params());
    EXPECT_DOUBLE_EQ(p.light_speed, cfg.background_c());
    EXPECT_NEAR(cfg.synthesis.theta_dc.over_pi(), -0.449, 1e-15);
    EXPECT_EQ(cfg.synthesis.time_samples.size(), 3u);
}

TEST(Config, AnglesInRadiansOrPiUnits) {
    auto a = parse_run_config({{"synthesis", {{"theta_dc", 1.0}}}});
    EXPECT_DOUBLE_EQ(a.synthesis.theta_dc.radians(), 1.0);
    auto b = parse_run_config({{"synthesis", {{"theta_dc_over_pi", 0.25}}}});
    EXPECT_DOUBLE_EQ(b.synthesis.theta_dc.radians(), std::numbers::pi / 4);
}

TEST(Config, UnknownKeysNamedByPath) {
    EXPECT_EQ(error_path({{"metric", {{"kind", "godel"}, {"aa", 1.0}}}}), "metric.aa");
    EXPECT_EQ(error_path({{"bogus", 1}}), "bogus");
    EXPECT_EQ(error_path({{"simulation", {{"pulse", {{"widht", 0.1}}}}}}), "simulation.pulse.widht");
}

TEST(Config, InvalidValuesNamedByPath) {
    EXPECT_EQ(error_path({{"metric", {{"kind", "godel"}, {"a", -1.0}}}}), "metric.a");
    EXPECT_EQ(error_path({{"metric", {{"kind", "wormhole"}}}}), "metric.kind");
    EXPECT_EQ(error_path({{"synthesis", {{"n_cells", "many"}}}}), "synthesis.n_cells");
}

TEST(Config, SpatiallyVaryingDcRejected) {
    EXPECT_EQ(error_path({{"synthesis", {{"theta_dc", {0.1, 0.2}}}}}), "synthesis.theta_dc");
}

TEST(Config, OverridesParseJsonOrString) {
    json doc = preset_document("godel");
    apply_override(doc, "synthesis.n_cells=64");
    apply_override(doc, "output.directory=results/run1");
    apply_override(doc, "metric.window=[0, 2]");
    const auto cfg = parse_run_config(doc);
    EXPECT_EQ(cfg.synthesis.array.n_cells, 64u);
    EXPECT_EQ(cfg.output.directory, "results/run1");
    EXPECT_EQ(cfg.metric.window.hi, 2.0);
    EXPECT_THROW(apply_override(doc, "no_equals_sign"), ConfigError);
}

TEST(Config, HashTracksContent) {
    const json a = preset_document("flat");
    json b = a;
    EXPECT_EQ(config_hash(a), config_hash(b));
    apply_override(b, "synthesis.n_cells=401");
    EXPECT_NE(config_hash(a), config_hash(b));
    EXPECT_EQ(parse_run_config(a).hash, config_hash(a));
}

TEST(Config, FamilyMembers) {
    const auto godel = parse_run_config(preset_document("fig2"));
    EXPECT_EQ(godel.feasibility.family, ProfileKind::godel);
    EXPECT_DOUBLE_EQ(std::get<GodelParams>(godel.family_member(2.5).params()).a, 2.5);
    const auto kerr = parse_run_config(preset_document("fig3"));
    EXPECT_DOUBLE_EQ(std::get<KerrExtremeParams>(kerr.family_member(0.3).params()).theta, 0.3);
    EXPECT_EQ(kerr.feasibility.grid.coords.size(), 400u);
}

TEST(Config, AxisSpecifications) {
    const auto cfg = parse_run_config(
        {{"metric", {{"kind", "godel"}}},
         {"feasibility", {{"params", {1.0}},
                          {"theta_dc_over_pi", {{"start", 0.0}, {"stop", 0.4}, {"count", 5}}},
                          {"coords", {0.0, 1.0}}}}});
    ASSERT_EQ(cfg.feasibility.grid.theta_dc.size(), 5u);
    EXPECT_NEAR(cfg.feasibility.grid.theta_dc[4], 0.4 * std::numbers::pi, 1e-15);
    EXPECT_EQ(cfg.feasibility.grid.coords.size(), 2u);
}

TEST(Config, FluxUnits) {
    const auto cfg = parse_run_config({{"output", {{"flux_units", "flux_quanta"}}}});
    EXPECT_EQ(cfg.output.flux_units, FluxUnits::flux_quanta);
    EXPECT_EQ(error_path({{"output", {{"flux_units", "degrees"}}}}), "output.flux_units");
}
