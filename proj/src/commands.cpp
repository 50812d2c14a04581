#include "warpline/commands.hpp"

#include "warpline/csv.hpp"
#include "warpline/errors.hpp"
#include "warpline/feasibility.hpp"
#include "warpline/program.hpp"
#include "warpline/ray.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>

namespace warpline {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string out_path(const RunConfig& cfg, const std::string& file) {
    std::filesystem::create_directories(cfg.output.directory);
    return (std::filesystem::path(cfg.output.directory) / file).string();
}

std::string header(const RunConfig& cfg, const std::string& command) {
    return "warpline " + command + " config_hash=" + cfg.hash + " flux_units=" +
           (cfg.output.flux_units == FluxUnits::radians ? "radians" : "flux_quanta");
}

/// Angle column value in the configured units.
double angle_out(const RunConfig& cfg, double radians) {
    return cfg.output.flux_units == FluxUnits::radians ? radians : radians / std::numbers::pi;
}

void write_json(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << doc.dump(2) << '\n';
}

json program_summary(const FluxProgram& program) {
    json counts = json::object();
    for (int s = 0; s <= 4; ++s) {
        const auto status = static_cast<FluxStatus>(s);
        counts[to_string(status)] = program.count(status);
    }
    std::size_t hot_max = 0;
    for (std::size_t k = 0; k < program.n_times(); ++k)
        hot_max = std::max(hot_max, program.hot_cells(k));
    return {
        {"n_cells", program.n_cells()},
        {"n_times", program.n_times()},
        {"theta_dc", program.dc().radians()},
        {"theta_dc_over_pi", program.dc().over_pi()},
        {"background_c", program.background_c()},
        {"c0", program.c0()},
        {"window", {program.window().lo, program.window().hi}},
        {"status_counts", counts},
        {"max_hot_cells_per_time", hot_max},
    };
}

/// Runs synthesis, writing program.csv and synth_summary.json. Returns the
/// program, or an exit code on structured failure.
std::variant<FluxProgram, int> synthesize_and_write(const RunConfig& cfg, std::ostream& log,
                                                    const std::string& command) {
    json summary = {{"command", command}, {"config_hash", cfg.hash}};
    const std::string summary_path = out_path(cfg, "synth_summary.json");
    try {
        FluxProgram program =
            synthesize_program(cfg.metric.profile, cfg.synthesis.theta_dc, cfg.synthesis.array,
                               cfg.synthesis.coord_window, cfg.synthesis.time_samples);
        CsvWriter csv(out_path(cfg, "program.csv"), header(cfg, command),
                      {"cell_index", "time_index", "r", "t", "theta_dc", "theta_ac", "theta_total",
                       "ctilde_sq", "status"});
        for (std::size_t k = 0; k < program.n_times(); ++k) {
            for (std::size_t i = 0; i < program.n_cells(); ++i) {
                const auto& e = program.at(i, k);
                csv.row() << i << k << e.r << e.t << angle_out(cfg, program.dc().radians())
                          << angle_out(cfg, e.ac.radians()) << angle_out(cfg, e.total.radians())
                          << e.ctilde_sq << to_string(e.status);
            }
        }
        summary["status"] = "ok";
        summary["program"] = program_summary(program);
        write_json(summary_path, summary);
        log << "synthesized " << program.n_cells() << " cells x " << program.n_times()
            << " time samples; background c = " << format_number(program.background_c()) << "\n";
        return program;
    } catch (const SynthesisFailed& e) {
        const double r = cell_coordinate(cfg.synthesis.coord_window, cfg.synthesis.array.n_cells,
                                         e.cell());
        summary["status"] = "failed";
        summary["failure"] = {{"kind", "SynthesisFailed"},
                              {"cell", e.cell()},
                              {"time_index", e.time_index()},
                              {"r", r},
                              {"t", cfg.synthesis.time_samples[e.time_index()]},
                              {"status", to_string(e.status())},
                              {"status_code", static_cast<int>(e.status())}};
        write_json(summary_path, summary);
        log << "synthesis infeasible: " << e.what() << "\n";
        return kExitSynthesis;
    } catch (const HotCellBudgetExceeded& e) {
        summary["status"] = "failed";
        summary["failure"] = {{"kind", "HotCellBudgetExceeded"},
                              {"count", e.count()},
                              {"allowed", e.allowed()},
                              {"time_index", e.time_index()}};
        write_json(summary_path, summary);
        log << "hot-cell budget exceeded: " << e.what() << "\n";
        return kExitHotCells;
    }
}

json grid_run_json(const GridRun& run) {
    return {
        {"solver", run.solver},
        {"n_points", run.n_points},
        {"dx", run.dx},
        {"dt", run.dt},
        {"steps", run.steps},
        {"max_abs_error", run.max_abs_error},
        {"max_rel_deviation", run.max_rel_deviation},
        {"mean_front_speed", run.mean_front_speed},
        {"max_causality_ratio", run.max_causality_ratio},
        {"times", run.times},
        {"front", run.front},
        {"ray", run.ray},
    };
}

void write_snapshots(const std::string& path, const std::string& comment, const GridRun& run) {
    CsvWriter csv(path, comment, {"t", "r", "value"});
    for (const auto& s : run.snapshots)
        for (std::size_t j = 0; j < s.positions.size(); ++j)
            csv.row() << s.time << s.positions[j] << s.values[j];
}

}  // namespace

json to_json(const VerificationReport& report) {
    json runs = json::array();
    for (const auto& r : report.runs) runs.push_back(grid_run_json(r));
    json out = {
        {"passed", report.passed},
        {"max_deviation", report.max_deviation},
        {"tolerance", report.tolerance},
        {"launch_front", report.launch_front},
        {"t_end", report.t_end},
        {"convergence_ratios", report.convergence_ratios},
        {"runs", runs},
        {"quantities", report.quantities},
    };
    if (report.stall) {
        const auto& s = *report.stall;
        out["stall"] = {{"horizon_r", s.horizon_r},         {"ray_stalled", s.ray_stalled},
                        {"wave_stalled", s.wave_stalled},   {"ray_speed_ratio", s.ray_speed_ratio},
                        {"wave_speed_ratio", s.wave_speed_ratio}, {"ray_final_r", s.ray_final_r},
                        {"wave_final_r", s.wave_final_r}};
    }
    return out;
}

json resolve_document(const std::optional<std::string>& preset,
                      const std::optional<std::string>& config_path,
                      const std::vector<std::string>& overrides) {
    json doc = preset ? preset_document(*preset) : json::object();
    if (config_path) {
        std::ifstream in(*config_path);
        if (!in) throw ConfigError("--config", "cannot open '" + *config_path + "'");
        json file = json::parse(in, nullptr, false);
        if (file.is_discarded()) throw ConfigError("--config", "'" + *config_path + "' is not valid JSON");
        if (!file.is_object()) throw ConfigError("--config", "top level must be an object");
        doc.merge_patch(file);
    }
    for (const auto& o : overrides) apply_override(doc, o);
    return doc;
}

int cmd_profile(const RunConfig& cfg, std::ostream& log) {
    CsvWriter csv(out_path(cfg, "profile.csv"), header(cfg, "profile"), {"r", "t", "ctilde_sq"});
    const auto rs = linspace(cfg.metric.window.lo, cfg.metric.window.hi, cfg.metric.n_samples);
    for (double t : cfg.metric.times)
        for (double r : rs) csv.row() << r << t << cfg.metric.profile.ctilde_sq(r, t);
    log << "sampled " << rs.size() * cfg.metric.times.size() << " profile points\n";
    return kExitOk;
}

int cmd_synth(const RunConfig& cfg, std::ostream& log) {
    auto result = synthesize_and_write(cfg, log, "synth");
    if (auto* code = std::get_if<int>(&result)) return *code;
    return kExitOk;
}

int cmd_feasibility(const RunConfig& cfg, std::ostream& log) {
    const FeasibilityReport report =
        feasibility_scan([&](double p) { return cfg.family_member(p); }, cfg.feasibility.grid,
                         cfg.synthesis.array);
    {
        CsvWriter csv(out_path(cfg, "feasibility.csv"), header(cfg, "feasibility"),
                      {"param_1", "param_2", "r", "status_code", "theta_total_or_nan"});
        for (const auto& p : report.points)
            csv.row() << p.param << angle_out(cfg, p.theta_dc) << p.r
                      << static_cast<int>(p.status) << angle_out(cfg, p.theta_total);
    }

    const std::string boundary = out_path(cfg, "boundary.csv");
    const auto& grid = cfg.feasibility.grid;
    switch (cfg.feasibility.family) {
        case ProfileKind::alcubierre: {
            CsvWriter csv(boundary, header(cfg, "feasibility"),
                          {"param_1", "ctilde_sq_max", "theta_dc_min", "theta_dc_min_over_pi"});
            for (double v : grid.params) {
                const double c2 = (1.0 + v) * (1.0 + v);
                const FluxAngle b = dc_feasibility_boundary(c2);
                csv.row() << v << c2 << angle_out(cfg, b.radians()) << b.over_pi();
            }
            break;
        }
        case ProfileKind::godel: {
            CsvWriter csv(boundary, header(cfg, "feasibility"),
                          {"param_1", "theta_dc", "theta_dc_over_pi", "r_max_over_2a", "r_max"});
            for (double a : grid.params) {
                for (double dc : grid.theta_dc) {
                    if (!(std::abs(dc) < kHalfPi)) continue;
                    const double u = godel_max_radius(FluxAngle(dc));
                    csv.row() << a << angle_out(cfg, dc) << dc / std::numbers::pi << u
                              << 2.0 * a * u;
                }
            }
            break;
        }
        case ProfileKind::kerr_extreme: {
            CsvWriter csv(boundary, header(cfg, "feasibility"),
                          {"param_1", "band_lo", "band_hi"});
            for (double theta : grid.params) {
                const double m =
                    std::get<KerrExtremeParams>(cfg.family_member(theta).params()).mass;
                // c̃² < 0  <=>  r² - 2Mr + M²cos²θ < 0  <=>  |r - M| < M sin θ.
                const double half = m * std::sin(theta);
                if (half > 0.0) csv.row() << theta << m - half << m + half;
                else csv.row() << theta << kNaN << kNaN;
            }
            break;
        }
        default: break;
    }

    for (int s = 0; s <= 4; ++s)
        log << to_string(static_cast<FluxStatus>(s)) << ": "
            << report.count(static_cast<FluxStatus>(s)) << "\n";
    return kExitOk;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& log) {
    auto result = synthesize_and_write(cfg, log, "simulate");
    if (auto* code = std::get_if<int>(&result)) return *code;
    const FluxProgram& program = std::get<FluxProgram>(result);

    RunSpec spec = cfg.simulation;
    spec.keep_snapshots = true;
    VerificationReport report;
    try {
        report = verify_program(program, cfg.metric.profile, cfg.synthesis.array, spec);
    } catch (const SimulationError& e) {
        write_json(out_path(cfg, "verification.json"),
                   {{"config_hash", cfg.hash}, {"passed", false}, {"error", e.what()}});
        log << "simulation failed: " << e.what() << "\n";
        return kExitSimulation;
    }

    json doc = to_json(report);
    doc["config_hash"] = cfg.hash;
    doc["program"] = program_summary(program);
    write_json(out_path(cfg, "verification.json"), doc);

    const std::string comment = header(cfg, "simulate");
    const GridRun* continuum = nullptr;
    const GridRun* ladder = nullptr;
    for (const auto& r : report.runs) {
        if (r.solver == "continuum") continuum = &r;  // last one is the finest
        if (r.solver == "ladder") ladder = &r;
    }
    if (continuum) write_snapshots(out_path(cfg, "snapshots.csv"), comment + " solver=continuum", *continuum);
    if (ladder) write_snapshots(out_path(cfg, "ladder_snapshots.csv"), comment + " solver=ladder", *ladder);

    log << "verification " << (report.passed ? "passed" : "FAILED")
        << ": max deviation " << format_number(report.max_deviation) << " (tolerance "
        << format_number(report.tolerance) << ")\n";
    return report.passed ? kExitOk : kExitSimulation;
}

int cmd_raytrace(const RunConfig& cfg, std::ostream& log) {
    CsvWriter csv(out_path(cfg, "rays.csv"), header(cfg, "raytrace"),
                  {"launch_index", "t", "r", "status"});
    const double bg = cfg.background_c();
    for (std::size_t l = 0; l < cfg.raytrace.launches.size(); ++l) {
        const RayLaunch& launch = cfg.raytrace.launches[l];
        const RayPath path = trace_null_geodesic(cfg.metric.profile, bg, launch.r0, launch.t0,
                                                 launch.direction, cfg.raytrace.t_end,
                                                 cfg.raytrace.dt);
        const std::size_t n = path.samples.size();
        for (std::size_t i = 0; i < n; ++i) {
            const bool last = i + 1 == n;
            if (!last && i % cfg.raytrace.sample_every != 0) continue;
            csv.row() << l << path.samples[i].t << path.samples[i].r
                      << (last ? to_string(path.status) : "ok");
        }
        log << "ray " << l << ": " << to_string(path.status) << " at t="
            << format_number(path.end_time()) << ", r=" << format_number(path.samples.back().r)
            << "\n";
    }
    return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Flux programs for SQUID-array analogues of exotic spacetime sections"};
    app.require_subcommand(1);

    std::optional<std::string> config_path;
    std::optional<std::string> preset;
    std::optional<std::string> out_dir;
    std::vector<std::string> overrides;

    using Command = int (*)(const RunConfig&, std::ostream&);
    std::vector<std::pair<CLI::App*, Command>> commands;
    auto add = [&](const char* name, const char* help, Command fn) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--config", config_path, "JSON run configuration");
        sub->add_option("--preset", preset, "Built-in configuration")
            ->check(CLI::IsMember(preset_names()));
        sub->add_option("--out", out_dir, "Output directory (overrides output.directory)");
        sub->add_option("--set", overrides, "Override a field, e.g. synthesis.n_cells=64");
        commands.emplace_back(sub, fn);
    };
    add("profile", "Sample c̃²(r,t) of the selected metric", cmd_profile);
    add("synth", "Synthesize the flux program", cmd_synth);
    add("feasibility", "Scan feasibility over a parameter grid", cmd_feasibility);
    add("simulate", "Synthesize and verify by wave simulation", cmd_simulate);
    add("raytrace", "Trace null geodesics of the section", cmd_raytrace);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitConfig;
    }

    try {
        json doc = resolve_document(preset, config_path, overrides);
        if (out_dir) apply_override(doc, "output.directory=" + json(*out_dir).dump());
        const RunConfig cfg = parse_run_config(doc);
        for (const auto& [sub, fn] : commands)
            if (sub->parsed()) return fn(cfg, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const DomainError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const SimulationError& e) {
        err << "simulation error: " << e.what() << "\n";
        return kExitSimulation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}

}  // namespace warpline
