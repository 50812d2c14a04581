#pragma once

// Run configuration: a single JSON document with blocks
//   metric, synthesis, simulation, feasibility, raytrace, output
// Unknown keys are rejected with their dotted path.

#include "warpline/feasibility.hpp"
#include "warpline/flux.hpp"
#include "warpline/metric.hpp"
#include "warpline/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace warpline {

enum class FluxUnits { radians, flux_quanta };

struct MetricBlock {
    SpeedProfile profile = SpeedProfile::flat();
    Interval window{0.0, 4.0};
    std::vector<double> times{0.0};
    std::size_t n_samples = 201;
};

struct SynthesisBlock {
    FluxAngle theta_dc;
    Interval coord_window{0.0, 4.0};
    ArrayConfig array;
    std::vector<double> time_samples{0.0};
};

struct FeasibilityBlock {
    ProfileKind family = ProfileKind::flat;
    FeasibilityGrid grid;
};

struct RayLaunch {
    double r0 = 0.0;
    double t0 = 0.0;
    int direction = +1;
};

struct RaytraceBlock {
    std::vector<RayLaunch> launches{RayLaunch{}};
    double t_end = 1.0;
    double dt = 1e-3;
    std::size_t sample_every = 1;
};

struct OutputBlock {
    std::string directory = "out";
    FluxUnits flux_units = FluxUnits::radians;
};

struct RunConfig {
    nlohmann::json document;  // fully resolved input
    std::string hash;         // FNV-1a 64 of document.dump(), hex
    MetricBlock metric;
    SynthesisBlock synthesis;
    RunSpec simulation;
    FeasibilityBlock feasibility;
    RaytraceBlock raytrace;
    OutputBlock output;

    [[nodiscard]] double background_c() const {
        return background_speed(synthesis.theta_dc, synthesis.array.c0);
    }
    /// Profile for one value of the feasibility family parameter, keeping
    /// the other metric parameters from the metric block.
    [[nodiscard]] SpeedProfile family_member(double param) const;
};

/// Throws ConfigError naming the offending field.
[[nodiscard]] RunConfig parse_run_config(const nlohmann::json& document);

[[nodiscard]] std::vector<std::string> preset_names();
/// Throws ConfigError for an unknown name.
[[nodiscard]] nlohmann::json preset_document(const std::string& name);

/// Applies "a.b.c=value"; value is parsed as JSON, falling back to a string.
void apply_override(nlohmann::json& document, const std::string& assignment);

[[nodiscard]] std::string config_hash(const nlohmann::json& document);

}  // namespace warpline
