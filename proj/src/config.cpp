#include "warpline/config.hpp"

#include "warpline/errors.hpp"

#include <cinttypes>
#include <cstdio>
#include <numbers>
#include <optional>
#include <set>

namespace warpline {

using nlohmann::json;

namespace {

/// Reads one JSON object, remembering which keys were consumed so leftovers
/// can be reported.
class Block {
public:
    Block(const json& doc, std::string path) : doc_(doc), path_(std::move(path)) {
        if (!doc_.is_object()) throw ConfigError(path_, "expected an object");
    }

    [[nodiscard]] bool has(const std::string& key) const { return doc_.contains(key); }

    [[nodiscard]] std::string child(const std::string& key) const {
        return path_.empty() ? key : path_ + "." + key;
    }

    const json* get(const std::string& key) {
        used_.insert(key);
        auto it = doc_.find(key);
        return it == doc_.end() ? nullptr : &*it;
    }

    std::optional<double> maybe_number(const std::string& key) {
        const json* v = get(key);
        if (!v) return std::nullopt;
        if (!v->is_number()) throw ConfigError(child(key), "expected a number");
        return v->get<double>();
    }

    double number(const std::string& key, double fallback) {
        return maybe_number(key).value_or(fallback);
    }

    std::size_t count(const std::string& key, std::size_t fallback) {
        const json* v = get(key);
        if (!v) return fallback;
        if (!v->is_number_integer() || v->get<long long>() < 0)
            throw ConfigError(child(key), "expected a non-negative integer");
        return v->get<std::size_t>();
    }

    bool boolean(const std::string& key, bool fallback) {
        const json* v = get(key);
        if (!v) return fallback;
        if (!v->is_boolean()) throw ConfigError(child(key), "expected true or false");
        return v->get<bool>();
    }

    std::string string(const std::string& key, const std::string& fallback) {
        const json* v = get(key);
        if (!v) return fallback;
        if (!v->is_string()) throw ConfigError(child(key), "expected a string");
        return v->get<std::string>();
    }

    std::optional<std::vector<double>> maybe_numbers(const std::string& key) {
        const json* v = get(key);
        if (!v) return std::nullopt;
        if (!v->is_array()) throw ConfigError(child(key), "expected an array of numbers");
        std::vector<double> out;
        for (std::size_t i = 0; i < v->size(); ++i) {
            if (!(*v)[i].is_number())
                throw ConfigError(child(key) + "[" + std::to_string(i) + "]", "expected a number");
            out.push_back((*v)[i].get<double>());
        }
        return out;
    }

    std::optional<Interval> maybe_interval(const std::string& key) {
        auto v = maybe_numbers(key);
        if (!v) return std::nullopt;
        if (v->size() != 2 || !((*v)[0] < (*v)[1]))
            throw ConfigError(child(key), "expected [lo, hi] with lo < hi");
        return Interval{(*v)[0], (*v)[1]};
    }

    /// Angle given either in radians (`key`) or in units of pi (`key_over_pi`).
    std::optional<double> maybe_angle(const std::string& key) {
        auto rad = maybe_number(key);
        auto pi_units = maybe_number(key + "_over_pi");
        if (rad && pi_units)
            throw ConfigError(child(key), "give either " + key + " or " + key + "_over_pi");
        if (pi_units) return *pi_units * std::numbers::pi;
        return rad;
    }

    /// Axis as an explicit list or {start, stop, count}.
    std::optional<std::vector<double>> maybe_axis(const std::string& key) {
        const json* v = doc_.contains(key) ? &doc_.at(key) : nullptr;
        if (!v) {
            used_.insert(key);
            return std::nullopt;
        }
        if (v->is_array()) return maybe_numbers(key);
        used_.insert(key);
        Block range(*v, child(key));
        const auto start = range.maybe_number("start");
        const auto stop = range.maybe_number("stop");
        const std::size_t n = range.count("count", 0);
        range.finish();
        if (!start || !stop || n == 0)
            throw ConfigError(child(key), "range needs start, stop and count >= 1");
        return linspace(*start, *stop, n);
    }

    void finish() const {
        for (const auto& [key, value] : doc_.items()) {
            if (!used_.count(key)) throw ConfigError(child(key), "unknown key");
        }
    }

private:
    const json& doc_;
    std::string path_;
    std::set<std::string> used_;
};

ProfileKind parse_kind(const std::string& name, const std::string& path) {
    if (name == "flat") return ProfileKind::flat;
    if (name == "alcubierre") return ProfileKind::alcubierre;
    if (name == "godel") return ProfileKind::godel;
    if (name == "kerr_extreme" || name == "kerr") return ProfileKind::kerr_extreme;
    if (name == "tabulated") return ProfileKind::tabulated;
    throw ConfigError(path, "unknown metric kind '" + name + "'");
}

template <class F>
auto wrap_domain(const std::string& path, F&& f) {
    try {
        return f();
    } catch (const DomainError& e) {
        throw ConfigError(path, e.what());
    }
}

struct MetricSpec {
    ProfileKind kind = ProfileKind::flat;
    AlcubierreParams alcubierre;
    GodelParams godel;
    KerrExtremeParams kerr;
    std::string table_path;
};

SpeedProfile build_profile_unchecked(const MetricSpec& spec) {
    switch (spec.kind) {
        case ProfileKind::flat: return SpeedProfile::flat();
        case ProfileKind::alcubierre: return SpeedProfile::alcubierre(spec.alcubierre);
        case ProfileKind::godel: return SpeedProfile::godel(spec.godel);
        case ProfileKind::kerr_extreme: return SpeedProfile::kerr_extreme(spec.kerr);
        case ProfileKind::tabulated:
            return SpeedProfile::tabulated(TabulatedProfile::from_csv_file(spec.table_path));
    }
    return SpeedProfile::flat();
}

// Parameter checks report "<family>: <field> must ..."; point the error at that field.
std::string param_path(const std::string& path, const std::string& message) {
    const auto colon = message.find(": ");
    if (colon == std::string::npos) return path;
    const auto start = colon + 2;
    const auto end = message.find(" must", start);
    if (end == std::string::npos) return path;
    const std::string field = message.substr(start, end - start);
    if (field.empty() || field.find(' ') != std::string::npos) return path;
    return path + "." + field;
}

SpeedProfile build_profile(const MetricSpec& spec, const std::string& path) {
    try {
        return build_profile_unchecked(spec);
    } catch (const DomainError& e) {
        throw ConfigError(spec.kind == ProfileKind::tabulated ? path + ".table"
                                                              : param_path(path, e.what()),
                          e.what());
    }
}

Interval default_window(const MetricSpec& spec, const SpeedProfile& profile) {
    switch (spec.kind) {
        case ProfileKind::alcubierre: {
            const double R = spec.alcubierre.bubble_radius;
            return {spec.alcubierre.x_s0 - 3.0 * R, spec.alcubierre.x_s0 + 3.0 * R};
        }
        case ProfileKind::godel: return {0.0, 4.0 * spec.godel.a};
        case ProfileKind::kerr_extreme: return {0.0, 4.0 * spec.kerr.mass};
        case ProfileKind::tabulated: return profile.valid_range();
        case ProfileKind::flat: return {0.0, 4.0};
    }
    return {0.0, 4.0};
}

}  // namespace

SpeedProfile RunConfig::family_member(double param) const {
    switch (feasibility.family) {
        case ProfileKind::flat: return SpeedProfile::flat();
        case ProfileKind::alcubierre: {
            AlcubierreParams p = metric.profile.kind() == ProfileKind::alcubierre
                                     ? std::get<AlcubierreParams>(metric.profile.params())
                                     : AlcubierreParams{};
            p.vs_over_c = param;
            p.light_speed = background_c();
            return SpeedProfile::alcubierre(p);
        }
        case ProfileKind::godel: return SpeedProfile::godel(GodelParams{param});
        case ProfileKind::kerr_extreme: {
            KerrExtremeParams p = metric.profile.kind() == ProfileKind::kerr_extreme
                                      ? std::get<KerrExtremeParams>(metric.profile.params())
                                      : KerrExtremeParams{};
            p.theta = param;
            return SpeedProfile::kerr_extreme(p);
        }
        case ProfileKind::tabulated: return metric.profile;
    }
    return metric.profile;
}

RunConfig parse_run_config(const json& document) {
    RunConfig cfg;
    cfg.document = document;
    cfg.hash = config_hash(document);
    Block root(document, "");

    // synthesis first: the Alcubierre bubble speed depends on the DC bias.
    json empty = json::object();
    const json* syn_doc = root.get("synthesis");
    Block syn(syn_doc ? *syn_doc : empty, "synthesis");
    if (syn.has("theta_dc") && syn_doc->at("theta_dc").is_array())
        throw ConfigError("synthesis.theta_dc",
                          "spatially varying DC flux is not supported; give one uniform value");
    cfg.synthesis.theta_dc = FluxAngle(syn.maybe_angle("theta_dc").value_or(0.0));
    if (!(std::abs(cfg.synthesis.theta_dc.radians()) < kHalfPi))
        throw ConfigError("synthesis.theta_dc", "|theta_dc| must be < pi/2");
    ArrayConfig& array = cfg.synthesis.array;
    array.n_cells = syn.count("n_cells", array.n_cells);
    array.cell_pitch = syn.number("cell_pitch", array.cell_pitch);
    array.c0 = syn.number("c0", array.c0);
    array.impedance_margin = syn.maybe_angle("impedance_margin").value_or(array.impedance_margin);
    array.max_hot_cells = syn.count("max_hot_cells", array.max_hot_cells);
    array.window_epsilon = syn.number("window_epsilon", array.window_epsilon);
    wrap_domain("synthesis", [&] {
        array.validate();
        return 0;
    });
    auto coord_window = syn.maybe_interval("coord_window");
    if (auto t = syn.maybe_numbers("time_samples")) {
        if (t->empty()) throw ConfigError("synthesis.time_samples", "need at least one sample");
        cfg.synthesis.time_samples = *t;
    }
    syn.finish();

    // metric
    const json* met_doc = root.get("metric");
    Block met(met_doc ? *met_doc : empty, "metric");
    MetricSpec spec;
    spec.kind = parse_kind(met.string("kind", "flat"), "metric.kind");
    switch (spec.kind) {
        case ProfileKind::alcubierre:
            spec.alcubierre.vs_over_c = met.number("vs_over_c", 0.0);
            spec.alcubierre.bubble_radius = met.number("bubble_radius", 1.0);
            spec.alcubierre.sigma = met.number("sigma", 8.0);
            spec.alcubierre.x_s0 = met.number("x_s0", 0.0);
            spec.alcubierre.top_hat = met.boolean("top_hat", false);
            spec.alcubierre.light_speed = cfg.background_c();
            break;
        case ProfileKind::godel: spec.godel.a = met.number("a", 1.0); break;
        case ProfileKind::kerr_extreme:
            spec.kerr.mass = met.number("mass", 1.0);
            spec.kerr.theta = met.maybe_angle("theta").value_or(0.0);
            break;
        case ProfileKind::tabulated:
            spec.table_path = met.string("table", "");
            if (spec.table_path.empty()) throw ConfigError("metric.table", "path required");
            break;
        case ProfileKind::flat: break;
    }
    cfg.metric.profile = build_profile(spec, "metric");
    cfg.metric.window = met.maybe_interval("window").value_or(default_window(spec, cfg.metric.profile));
    if (auto t = met.maybe_numbers("times")) {
        if (t->empty()) throw ConfigError("metric.times", "need at least one time");
        cfg.metric.times = *t;
    }
    cfg.metric.n_samples = met.count("n_samples", cfg.metric.n_samples);
    if (cfg.metric.n_samples < 2) throw ConfigError("metric.n_samples", "need at least 2 samples");
    met.finish();
    if (!cfg.metric.profile.valid_range().contains(cfg.metric.window))
        throw ConfigError("metric.window", "window leaves the profile's valid range");
    cfg.synthesis.coord_window = coord_window.value_or(cfg.metric.window);
    if (!cfg.metric.profile.valid_range().contains(cfg.synthesis.coord_window))
        throw ConfigError("synthesis.coord_window", "window leaves the profile's valid range");

    // simulation
    const json* sim_doc = root.get("simulation");
    Block sim(sim_doc ? *sim_doc : empty, "simulation");
    RunSpec& run = cfg.simulation;
    const std::string solver = sim.string("solver", "continuum");
    if (solver == "continuum") run.solver = SolverChoice::continuum;
    else if (solver == "ladder") run.solver = SolverChoice::ladder;
    else if (solver == "both") run.solver = SolverChoice::both;
    else throw ConfigError("simulation.solver", "expected continuum, ladder or both");
    if (const json* pulse_doc = sim.get("pulse")) {
        Block pulse(*pulse_doc, "simulation.pulse");
        run.pulse_center = pulse.number("center", cfg.synthesis.coord_window.lo +
                                                      0.1 * cfg.synthesis.coord_window.span());
        run.pulse_width = pulse.number("width", run.pulse_width);
        const double dir = pulse.number("direction", 1.0);
        if (dir != 1.0 && dir != -1.0) throw ConfigError("simulation.pulse.direction", "expected ±1");
        run.direction = static_cast<int>(dir);
        pulse.finish();
    } else {
        run.pulse_center = cfg.synthesis.coord_window.lo + 0.1 * cfg.synthesis.coord_window.span();
    }
    run.t_end = sim.number("t_end", run.t_end);
    run.snapshots = sim.count("snapshots", run.snapshots);
    run.threshold = sim.number("threshold", run.threshold);
    run.tolerance = sim.number("tolerance", run.tolerance);
    run.levels = sim.count("levels", run.levels);
    run.points_per_width = sim.number("points_per_width", run.points_per_width);
    run.cfl = sim.number("cfl", run.cfl);
    run.ray_dt = sim.number("ray_dt", run.ray_dt);
    run.min_travel = sim.number("min_travel", run.min_travel);
    run.sponge_fraction = sim.number("sponge_fraction", run.sponge_fraction);
    sim.finish();
    if (run.snapshots < 3) throw ConfigError("simulation.snapshots", "need at least 3");
    if (run.levels < 1) throw ConfigError("simulation.levels", "need at least 1");
    if (!(run.threshold > 0.0 && run.threshold < 1.0))
        throw ConfigError("simulation.threshold", "must lie in (0, 1)");
    if (!(run.cfl > 0.0 && run.cfl < 1.0)) throw ConfigError("simulation.cfl", "must lie in (0, 1)");
    if (!(run.pulse_width > 0.0)) throw ConfigError("simulation.pulse.width", "must be > 0");
    if (!(run.points_per_width > 0.0))
        throw ConfigError("simulation.points_per_width", "must be > 0");
    if (!(run.sponge_fraction >= 0.0 && run.sponge_fraction < 0.5))
        throw ConfigError("simulation.sponge_fraction", "must lie in [0, 0.5)");

    // feasibility
    const json* fea_doc = root.get("feasibility");
    Block fea(fea_doc ? *fea_doc : empty, "feasibility");
    cfg.feasibility.family = parse_kind(fea.string("family", to_string(spec.kind)), "feasibility.family");
    if (cfg.feasibility.family == ProfileKind::tabulated && spec.kind != ProfileKind::tabulated)
        throw ConfigError("feasibility.family", "tabulated family needs a tabulated metric");
    FeasibilityGrid& grid = cfg.feasibility.grid;
    if (auto p = fea.maybe_axis("params")) {
        grid.params = *p;
    } else {
        switch (cfg.feasibility.family) {
            case ProfileKind::alcubierre: grid.params = {spec.alcubierre.vs_over_c}; break;
            case ProfileKind::godel: grid.params = {spec.godel.a}; break;
            case ProfileKind::kerr_extreme: grid.params = {spec.kerr.theta}; break;
            default: grid.params = {0.0}; break;
        }
    }
    if (auto dc = fea.maybe_axis("theta_dc_over_pi")) {
        for (double v : *dc) grid.theta_dc.push_back(v * std::numbers::pi);
    } else {
        grid.theta_dc = {cfg.synthesis.theta_dc.radians()};
    }
    grid.coords = fea.maybe_axis("coords").value_or(
        linspace(cfg.metric.window.lo, cfg.metric.window.hi, cfg.metric.n_samples));
    grid.time = fea.number("time", 0.0);
    fea.finish();
    if (grid.size() == 0) throw ConfigError("feasibility", "grid is empty");
    for (double p : grid.params) {
        (void)wrap_domain("feasibility.params", [&] { return cfg.family_member(p); });
    }

    // raytrace
    const json* ray_doc = root.get("raytrace");
    Block ray(ray_doc ? *ray_doc : empty, "raytrace");
    if (const json* launches = ray.get("launches")) {
        if (!launches->is_array() || launches->empty())
            throw ConfigError("raytrace.launches", "expected a non-empty array");
        cfg.raytrace.launches.clear();
        for (std::size_t i = 0; i < launches->size(); ++i) {
            const std::string path = "raytrace.launches[" + std::to_string(i) + "]";
            Block l((*launches)[i], path);
            RayLaunch launch;
            launch.r0 = l.number("r0", 0.0);
            launch.t0 = l.number("t0", 0.0);
            const double dir = l.number("direction", 1.0);
            if (dir != 1.0 && dir != -1.0) throw ConfigError(path + ".direction", "expected ±1");
            launch.direction = static_cast<int>(dir);
            l.finish();
            if (!cfg.metric.profile.valid_range().contains(launch.r0))
                throw ConfigError(path + ".r0", "outside the profile's valid range");
            cfg.raytrace.launches.push_back(launch);
        }
    }
    cfg.raytrace.t_end = ray.number("t_end", cfg.raytrace.t_end);
    cfg.raytrace.dt = ray.number("dt", cfg.raytrace.dt);
    cfg.raytrace.sample_every = ray.count("sample_every", cfg.raytrace.sample_every);
    ray.finish();
    if (!(cfg.raytrace.dt > 0.0)) throw ConfigError("raytrace.dt", "must be > 0");
    if (cfg.raytrace.sample_every < 1) throw ConfigError("raytrace.sample_every", "must be >= 1");
    for (const auto& l : cfg.raytrace.launches)
        if (!(cfg.raytrace.t_end > l.t0))
            throw ConfigError("raytrace.t_end", "must exceed every launch t0");

    // output
    const json* out_doc = root.get("output");
    Block out(out_doc ? *out_doc : empty, "output");
    cfg.output.directory = out.string("directory", cfg.output.directory);
    const std::string units = out.string("flux_units", "radians");
    if (units == "radians") cfg.output.flux_units = FluxUnits::radians;
    else if (units == "flux_quanta") cfg.output.flux_units = FluxUnits::flux_quanta;
    else throw ConfigError("output.flux_units", "expected radians or flux_quanta");
    out.finish();

    root.finish();
    return cfg;
}

std::vector<std::string> preset_names() {
    return {"flat", "alcubierre", "godel", "kerr", "kerr_equator", "fig1", "fig2", "fig3"};
}

json preset_document(const std::string& name) {
    const double pi = std::numbers::pi;
    if (name == "flat") {
        return {
            {"metric", {{"kind", "flat"}, {"window", {0.0, 4.0}}}},
            {"synthesis", {{"theta_dc", 0.0}, {"n_cells", 400}}},
            {"simulation",
             {{"solver", "both"}, {"pulse", {{"center", 0.3}, {"width", 0.05}, {"direction", 1}}}}},
            {"raytrace", {{"launches", {{{"r0", 0.0}, {"t0", 0.0}, {"direction", 1}}}},
                          {"t_end", 3.0}, {"dt", 1e-3}, {"sample_every", 10}}},
        };
    }
    if (name == "alcubierre") {
        return {
            {"metric",
             {{"kind", "alcubierre"}, {"vs_over_c", 1.5}, {"bubble_radius", 1.0},
              {"x_s0", 1.5}, {"top_hat", true}, {"window", {0.0, 8.0}}, {"times", {0.0, 0.5, 1.0}},
              {"n_samples", 801}}},
            {"synthesis",
             {{"theta_dc_over_pi", -0.449}, {"n_cells", 800}, {"time_samples", {0.0, 0.5, 1.0}}}},
            {"simulation",
             {{"solver", "both"},
              {"pulse", {{"center", 0.85}, {"width", 0.05}, {"direction", 1}}},
              {"t_end", 1.0}}},
            {"feasibility",
             {{"params", {0.5, 1.0, 1.5}},
              {"theta_dc_over_pi", {{"start", -0.5}, {"stop", 0.5}, {"count", 1001}}}}},
            {"raytrace", {{"launches", {{{"r0", 1.5}, {"t0", 0.0}, {"direction", 1}}}},
                          {"t_end", 2.0}, {"dt", 1e-3}, {"sample_every", 10}}},
        };
    }
    if (name == "godel") {
        return {
            {"metric", {{"kind", "godel"}, {"a", 1.0}, {"window", {0.0, 3.8}}, {"n_samples", 381}}},
            {"synthesis", {{"theta_dc_over_pi", 0.45}, {"n_cells", 400}}},
            {"simulation",
             {{"solver", "both"}, {"pulse", {{"center", 0.3}, {"width", 0.05}, {"direction", 1}}}}},
            {"feasibility",
             {{"theta_dc_over_pi", {{"start", 0.0}, {"stop", 0.49}, {"count", 50}}},
              {"coords", {{"start", 0.0}, {"stop", 6.0}, {"count", 301}}}}},
            {"raytrace", {{"launches", {{{"r0", 0.0}, {"t0", 0.0}, {"direction", 1}}}},
                          {"t_end", 2.0}, {"dt", 1e-3}, {"sample_every", 10}}},
        };
    }
    if (name == "kerr" || name == "kerr_equator") {
        const double theta = name == "kerr" ? 0.0 : 0.5;
        return {
            {"metric",
             {{"kind", "kerr_extreme"}, {"mass", 1.0}, {"theta_over_pi", theta},
              {"window", {0.02, 4.0}}, {"n_samples", 200}}},
            {"synthesis", {{"theta_dc", 0.0}, {"n_cells", 202}, {"coord_window", {0.0, 4.0}}}},
            {"simulation",
             {{"solver", "continuum"},
              {"pulse", {{"center", 3.0}, {"width", 0.1}, {"direction", -1}}},
              {"t_end", 40.0}}},
            {"raytrace", {{"launches", {{{"r0", 3.0}, {"t0", 0.0}, {"direction", -1}}}},
                          {"t_end", 40.0}, {"dt", 1e-3}, {"sample_every", 100}}},
        };
    }
    if (name == "fig1") {
        return {
            {"metric",
             {{"kind", "alcubierre"}, {"bubble_radius", 1.0}, {"top_hat", true},
              {"window", {-2.0, 2.0}}, {"n_samples", 81}}},
            {"feasibility",
             {{"family", "alcubierre"},
              {"params", {0.5, 1.0, 1.5}},
              {"theta_dc_over_pi", {{"start", -0.5}, {"stop", 0.5}, {"count", 1001}}},
              {"coords", {{"start", -2.0}, {"stop", 2.0}, {"count", 81}}}}},
        };
    }
    if (name == "fig2") {
        return {
            {"metric", {{"kind", "godel"}, {"a", 1.0}, {"window", {0.0, 6.0}}}},
            {"feasibility",
             {{"family", "godel"},
              {"params", {1.0}},
              {"theta_dc_over_pi", {{"start", 0.0}, {"stop", 0.49}, {"count", 50}}},
              {"coords", {{"start", 0.0}, {"stop", 6.0}, {"count", 601}}}}},
        };
    }
    if (name == "fig3") {
        return {
            {"metric", {{"kind", "kerr_extreme"}, {"mass", 1.0}, {"window", {0.01, 4.0}}}},
            {"synthesis", {{"theta_dc", 0.0}}},
            {"feasibility",
             {{"family", "kerr_extreme"},
              {"params", {0.0, pi / 4, pi / 2}},
              {"theta_dc_over_pi", {0.0}},
              {"coords", {{"start", 0.01}, {"stop", 4.0}, {"count", 400}}}}},
        };
    }
    throw ConfigError("--preset", "unknown preset '" + name + "'");
}

void apply_override(json& document, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ConfigError("--set", "expected KEY=VALUE, got '" + assignment + "'");
    const std::string key = assignment.substr(0, eq);
    const std::string text = assignment.substr(eq + 1);
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded()) value = text;

    json* node = &document;
    std::size_t start = 0;
    while (true) {
        const auto dot = key.find('.', start);
        const std::string part = key.substr(start, dot == std::string::npos ? dot : dot - start);
        if (part.empty()) throw ConfigError("--set", "empty path component in '" + key + "'");
        if (!node->is_object()) throw ConfigError(key, "parent is not an object");
        if (dot == std::string::npos) {
            (*node)[part] = value;
            return;
        }
        node = &(*node)[part];
        if (node->is_null()) *node = json::object();
        start = dot + 1;
    }
}

std::string config_hash(const json& document) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : document.dump()) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

}  // namespace warpline
