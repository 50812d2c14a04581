#include "warpline/ray.hpp"

#include "warpline/errors.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace warpline {

const char* to_string(RayStatus status) {
    switch (status) {
        case RayStatus::completed: return "completed";
        case RayStatus::left_domain: return "left_domain";
        case RayStatus::negative_ctilde: return "negative_ctilde";
    }
    return "unknown";
}

double RayPath::position_at(double t) const {
    if (samples.empty()) throw DomainError("RayPath: empty path");
    if (t <= samples.front().t) return samples.front().r;
    if (t >= samples.back().t) return samples.back().r;
    auto it = std::upper_bound(samples.begin(), samples.end(), t,
                               [](double v, const RaySample& s) { return v < s.t; });
    const auto hi = static_cast<std::size_t>(it - samples.begin());
    const auto lo = hi - 1;
    const double h = samples[hi].t - samples[lo].t;
    const double s = (t - samples[lo].t) / h;
    const double s2 = s * s;
    const double s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * samples[lo].r + (s3 - 2 * s2 + s) * h * slopes[lo] +
           (-2 * s3 + 3 * s2) * samples[hi].r + (s3 - s2) * h * slopes[hi];
}

namespace {

enum class Probe { ok, outside, negative };

struct Rhs {
    const SpeedProfile& profile;
    double background_c;
    int direction;

    Probe operator()(double r, double t, double& out) const {
        if (!profile.valid_range().contains(r)) return Probe::outside;
        const double c2 = profile.ctilde_sq(r, t);
        if (c2 < 0.0) return Probe::negative;
        out = direction * background_c * std::sqrt(c2);
        return Probe::ok;
    }
};

RayStatus status_of(Probe p) {
    return p == Probe::outside ? RayStatus::left_domain : RayStatus::negative_ctilde;
}

}  // namespace

RayPath trace_null_geodesic(const SpeedProfile& profile, double background_c, double r0,
                            double t0, int direction, double t_end, double dt) {
    if (direction != 1 && direction != -1) throw DomainError("trace: direction must be ±1");
    if (!(t_end > t0)) throw DomainError("trace: t_end must exceed t0");
    if (!(dt > 0.0)) throw DomainError("trace: dt must be > 0");
    if (!(background_c > 0.0)) throw DomainError("trace: background_c must be > 0");
    if (!profile.valid_range().contains(r0)) throw DomainError("trace: r0 outside valid range");

    const Rhs rhs{profile, background_c, direction};
    RayPath path;
    path.direction = direction;

    double k1 = 0.0;
    if (Probe p = rhs(r0, t0, k1); p != Probe::ok) {
        path.samples.push_back({t0, r0});
        path.slopes.push_back(0.0);
        path.status = status_of(p);
        return path;
    }
    path.samples.push_back({t0, r0});
    path.slopes.push_back(k1);

    double t = t0;
    double r = r0;
    while (t < t_end) {
        const double h = std::min(dt, t_end - t);
        double k2 = 0.0;
        double k3 = 0.0;
        double k4 = 0.0;
        std::optional<Probe> failed;
        if (Probe p = rhs(r + 0.5 * h * k1, t + 0.5 * h, k2); p != Probe::ok) failed = p;
        else if (p = rhs(r + 0.5 * h * k2, t + 0.5 * h, k3); p != Probe::ok) failed = p;
        else if (p = rhs(r + h * k3, t + h, k4); p != Probe::ok) failed = p;
        double r_next = r + h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
        double k_next = 0.0;
        if (!failed) {
            if (Probe p = rhs(r_next, t + h, k_next); p != Probe::ok) failed = p;
        }
        if (failed) {
            path.status = status_of(*failed);
            return path;
        }
        t = (h == t_end - t) ? t_end : t + h;
        r = r_next;
        k1 = k_next;
        path.samples.push_back({t, r});
        path.slopes.push_back(k1);
    }
    return path;
}

}  // namespace warpline
