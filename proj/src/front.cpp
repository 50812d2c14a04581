#include "warpline/front.hpp"

#include "warpline/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace warpline {

double locate_front(const Snapshot& snapshot, double threshold, int direction) {
    const auto& x = snapshot.positions;
    const auto& v = snapshot.values;
    if (x.size() != v.size() || x.size() < 2)
        throw DomainError("locate_front: snapshot needs matching positions/values");
    if (!(threshold > 0.0 && threshold < 1.0))
        throw DomainError("locate_front: threshold must lie in (0, 1)");
    if (direction != 1 && direction != -1) throw DomainError("locate_front: direction must be ±1");

    double peak = 0.0;
    for (double s : v) peak = std::max(peak, std::abs(s));
    if (!(peak > 0.0)) throw FrontNotFound("locate_front: field is identically zero");
    const double level = threshold * peak;

    const std::size_t n = x.size();
    auto sample = [&](std::size_t k) { return direction > 0 ? n - 1 - k : k; };
    if (std::abs(v[sample(0)]) >= level)
        throw FrontNotFound("locate_front: pulse already touches the domain edge");
    for (std::size_t k = 1; k < n; ++k) {
        const std::size_t inner = sample(k);
        if (std::abs(v[inner]) >= level) {
            const std::size_t outer = sample(k - 1);
            const double a = std::abs(v[inner]);
            const double b = std::abs(v[outer]);
            const double w = (a - level) / (a - b);
            return x[inner] + w * (x[outer] - x[inner]);
        }
    }
    throw FrontNotFound("locate_front: no threshold crossing");
}

FrontSpeedEstimate measure_front_speed(std::span<const Snapshot> snapshots, double threshold,
                                       int direction) {
    if (snapshots.size() < 3) throw DomainError("measure_front_speed: need at least 3 snapshots");
    FrontSpeedEstimate est;
    for (const auto& s : snapshots) {
        est.times.push_back(s.time);
        est.positions.push_back(locate_front(s, threshold, direction));
    }
    for (std::size_t k = 1; k < est.times.size(); ++k) {
        const double dt = est.times[k] - est.times[k - 1];
        if (!(dt > 0.0)) throw DomainError("measure_front_speed: snapshot times must increase");
        est.speeds.push_back((est.positions[k] - est.positions[k - 1]) / dt);
    }
    est.mean_speed = std::accumulate(est.speeds.begin(), est.speeds.end(), 0.0) /
                     static_cast<double>(est.speeds.size());
    return est;
}

}  // namespace warpline
