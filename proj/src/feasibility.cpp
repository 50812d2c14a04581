#include "warpline/feasibility.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace warpline {

std::size_t FeasibilityReport::count(FluxStatus status) const {
    return static_cast<std::size_t>(std::count_if(
        points.begin(), points.end(), [&](const FeasibilityPoint& p) { return p.status == status; }));
}

unsigned default_worker_count() {
    if (const char* env = std::getenv("WARPLINE_WORKERS")) {
        try {
            const long n = std::stol(env);
            if (n >= 1) return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    if (n > 1) out.back() = hi;
    return out;
}

FeasibilityReport feasibility_scan(const ProfileFamily& family, const FeasibilityGrid& grid,
                                   const ArrayConfig& config, unsigned workers) {
    if (grid.size() == 0) throw DomainError("feasibility_scan: grid is empty");
    config.validate();

    std::vector<SpeedProfile> profiles;
    profiles.reserve(grid.params.size());
    for (double p : grid.params) profiles.push_back(family(p));

    FeasibilityReport report;
    report.grid = grid;
    report.points.resize(grid.size());

    const std::size_t n_dc = grid.theta_dc.size();
    const std::size_t n_r = grid.coords.size();
    auto fill = [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const std::size_t ir = idx % n_r;
            const std::size_t idc = (idx / n_r) % n_dc;
            const std::size_t ip = idx / (n_r * n_dc);
            const double r = grid.coords[ir];
            const FluxAngle dc(grid.theta_dc[idc]);
            const double c2 = profiles[ip].ctilde_sq(r, grid.time);
            const PointClassification c = classify_point(c2, dc, config);
            report.points[idx] = {grid.params[ip], dc.radians(), r, c.status, c.theta_total};
        }
    };

    if (workers == 0) workers = default_worker_count();
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, grid.size()));
    if (workers <= 1) {
        fill(0, grid.size());
        return report;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    const std::size_t chunk = (grid.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(grid.size(), begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] {
            try {
                fill(begin, end);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return report;
}

}  // namespace warpline
