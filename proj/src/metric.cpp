#include "warpline/metric.hpp"

#include "warpline/errors.hpp"

#include <algorithm>
#include <fstream>
#include <numbers>
#include <sstream>

namespace warpline {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

const char* to_string(FluxStatus status) {
    switch (status) {
        case FluxStatus::feasible: return "feasible";
        case FluxStatus::impedance_warning: return "impedance_warning";
        case FluxStatus::window_violation: return "window_violation";
        case FluxStatus::arccos_infeasible: return "arccos_infeasible";
        case FluxStatus::negative_ctilde: return "negative_ctilde";
    }
    return "unknown";
}

SynthesisFailed::SynthesisFailed(std::size_t cell, std::size_t time_index, FluxStatus status)
    : std::runtime_error("synthesis failed at cell " + std::to_string(cell) + ", time sample " +
                         std::to_string(time_index) + ": " + to_string(status)),
      cell_(cell),
      time_index_(time_index),
      status_(status) {}

HotCellBudgetExceeded::HotCellBudgetExceeded(std::size_t count, std::size_t allowed,
                                             std::size_t time_index)
    : std::runtime_error("time sample " + std::to_string(time_index) + " has " +
                         std::to_string(count) + " cells at the pi/2 window (allowed " +
                         std::to_string(allowed) + ")"),
      count_(count),
      allowed_(allowed),
      time_index_(time_index) {}

SingularInductance::SingularInductance(std::size_t cell, double time)
    : SimulationError("cell " + std::to_string(cell) + " has |cos theta| < 1e-9 at t=" +
                      std::to_string(time)),
      cell_(cell) {}

const char* to_string(ProfileKind kind) {
    switch (kind) {
        case ProfileKind::flat: return "flat";
        case ProfileKind::alcubierre: return "alcubierre";
        case ProfileKind::godel: return "godel";
        case ProfileKind::kerr_extreme: return "kerr_extreme";
        case ProfileKind::tabulated: return "tabulated";
    }
    return "unknown";
}

void AlcubierreParams::validate() const {
    if (!(bubble_radius > 0.0)) throw DomainError("alcubierre: bubble_radius must be > 0");
    if (!top_hat && !(sigma > 0.0)) throw DomainError("alcubierre: sigma must be > 0");
    if (!(vs_over_c >= 0.0)) throw DomainError("alcubierre: vs_over_c must be >= 0");
    if (!(light_speed > 0.0)) throw DomainError("alcubierre: light_speed must be > 0");
    if (!std::isfinite(x_s0)) throw DomainError("alcubierre: x_s0 must be finite");
}

void GodelParams::validate() const {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("godel: a must be > 0");
}

void KerrExtremeParams::validate() const {
    if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("kerr: mass must be > 0");
    if (!(theta >= 0.0 && theta <= std::numbers::pi / 2))
        throw DomainError("kerr: theta must lie in [0, pi/2]");
}

double shape_function(double r_s, const AlcubierreParams& params) {
    if (!(r_s >= 0.0)) throw DomainError("shape_function: r_s must be >= 0");
    if (params.top_hat) return r_s <= params.bubble_radius ? 1.0 : 0.0;
    const double s = params.sigma;
    const double R = params.bubble_radius;
    return (std::tanh(s * (r_s + R)) - std::tanh(s * (r_s - R))) / (2.0 * std::tanh(s * R));
}

double bubble_center(double t, const AlcubierreParams& params) {
    return params.x_s0 + params.vs_over_c * params.light_speed * t;
}

double ctilde_sq_alcubierre(double x, double t, const AlcubierreParams& params) {
    const double r_s = std::abs(x - bubble_center(t, params));
    const double c = 1.0 + params.vs_over_c * shape_function(r_s, params);
    return c * c;
}

double ctilde_sq_godel(double r, const GodelParams& params) {
    const double u = r / (2.0 * params.a);
    return 1.0 + u * u;
}

double ctilde_sq_kerr_extreme(double r, const KerrExtremeParams& params) {
    const double M = params.mass;
    // Complementary angle keeps cos θ exactly 0 on the equatorial slice.
    const double co = std::numbers::pi / 2 - params.theta;
    const double cos_t = std::sin(co);
    const double sin_t = std::cos(co);
    const double sigma = r * r + M * M * cos_t * cos_t;
    if (sigma == 0.0) throw DomainError("kerr: ring singularity at r=0, theta=pi/2");
    const double d = M - r;
    // Σ - 2Mr = (r - M)² - M²sin²θ, factored so the ergoregion roots are exact.
    const double ergo = (r - M - M * sin_t) * (r - M + M * sin_t);
    return ergo / sigma * (d * d) / sigma;
}

// --- TabulatedProfile --------------------------------------------------------

TabulatedProfile::TabulatedProfile(std::vector<double> r, std::vector<double> ctilde_sq)
    : r_(std::move(r)), values_(std::move(ctilde_sq)) {
    if (r_.size() != values_.size()) throw DomainError("tabulated: column lengths differ");
    if (r_.size() < 2) throw DomainError("tabulated: need at least two samples");
    for (std::size_t i = 0; i < r_.size(); ++i) {
        if (!std::isfinite(r_[i]) || !std::isfinite(values_[i]))
            throw DomainError("tabulated: non-finite sample at row " + std::to_string(i));
        if (i > 0 && !(r_[i] > r_[i - 1]))
            throw DomainError("tabulated: r must be strictly increasing (row " +
                              std::to_string(i) + ")");
    }
}

TabulatedProfile TabulatedProfile::from_csv(std::istream& in) {
    std::vector<double> r;
    std::vector<double> v;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        double a = 0.0;
        double b = 0.0;
        if (!(fields >> a >> b)) {
            if (r.empty()) continue;  // header row
            throw DomainError("tabulated: malformed row " + std::to_string(row));
        }
        r.push_back(a);
        v.push_back(b);
    }
    return TabulatedProfile(std::move(r), std::move(v));
}

TabulatedProfile TabulatedProfile::from_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("tabulated: cannot open '" + path + "'");
    return from_csv(in);
}

double TabulatedProfile::operator()(double r) const {
    if (!(r >= r_.front() && r <= r_.back()))
        throw DomainError("tabulated: r=" + std::to_string(r) + " outside table");
    auto it = std::upper_bound(r_.begin(), r_.end(), r);
    if (it == r_.end()) return values_.back();
    const auto hi = static_cast<std::size_t>(it - r_.begin());
    const auto lo = hi - 1;
    const double w = (r - r_[lo]) / (r_[hi] - r_[lo]);
    return values_[lo] + w * (values_[hi] - values_[lo]);
}

// --- SpeedProfile ------------------------------------------------------------

SpeedProfile::SpeedProfile(ProfileKind kind, Params params, Interval range)
    : kind_(kind), params_(std::move(params)), valid_range_(range) {}

SpeedProfile SpeedProfile::flat() {
    return SpeedProfile(ProfileKind::flat, std::monostate{}, Interval{-kInf, kInf});
}

SpeedProfile SpeedProfile::alcubierre(const AlcubierreParams& params) {
    params.validate();
    return SpeedProfile(ProfileKind::alcubierre, params, Interval{-kInf, kInf});
}

// The profile is even in r, so the range covers a full diameter through the
// axis; this keeps central stencils at r=0 inside the domain.
SpeedProfile SpeedProfile::godel(const GodelParams& params) {
    params.validate();
    return SpeedProfile(ProfileKind::godel, params, Interval{-kInf, kInf});
}

SpeedProfile SpeedProfile::kerr_extreme(const KerrExtremeParams& params) {
    params.validate();
    return SpeedProfile(ProfileKind::kerr_extreme, params, Interval{0.0, kInf});
}

SpeedProfile SpeedProfile::tabulated(TabulatedProfile table) {
    const Interval range = table.range();
    return SpeedProfile(ProfileKind::tabulated, std::move(table), range);
}

SpeedProfile SpeedProfile::with_range(const Interval& range) const {
    if (!(range.lo < range.hi)) throw DomainError("profile range must have lo < hi");
    if (!valid_range_.contains(range))
        throw DomainError("profile range must lie inside the current valid range");
    SpeedProfile copy = *this;
    copy.valid_range_ = range;
    return copy;
}

double SpeedProfile::length_scale() const {
    return std::visit(Overloaded{
                          [](const std::monostate&) { return 1.0; },
                          [](const AlcubierreParams& p) { return p.bubble_radius; },
                          [](const GodelParams& p) { return p.a; },
                          [](const KerrExtremeParams& p) { return p.mass; },
                          [](const TabulatedProfile& p) { return p.range().span(); },
                      },
                      params_);
}

double SpeedProfile::ctilde_sq(double r, double t) const {
    if (!valid_range_.contains(r))
        throw DomainError("r=" + std::to_string(r) + " outside the valid range of the " +
                          to_string(kind_) + " profile");
    return std::visit(Overloaded{
                          [](const std::monostate&) { return 1.0; },
                          [&](const AlcubierreParams& p) { return ctilde_sq_alcubierre(r, t, p); },
                          [&](const GodelParams& p) { return ctilde_sq_godel(r, p); },
                          [&](const KerrExtremeParams& p) { return ctilde_sq_kerr_extreme(r, p); },
                          [&](const TabulatedProfile& p) { return p(r); },
                      },
                      params_);
}

double SpeedProfile::max_ctilde_sq(const Interval& window) const {
    if (!window.finite()) throw DomainError("max_ctilde_sq needs a finite window");
    switch (kind_) {
        case ProfileKind::flat: return 1.0;
        case ProfileKind::alcubierre: {
            // f peaks at 1 on the bubble centre, which sweeps the whole line.
            const double v = std::get<AlcubierreParams>(params_).vs_over_c;
            return (1.0 + v) * (1.0 + v);
        }
        case ProfileKind::godel: {
            const double r = std::max(std::abs(window.lo), std::abs(window.hi));
            return ctilde_sq_godel(r, std::get<GodelParams>(params_));
        }
        case ProfileKind::tabulated: {
            const auto& table = std::get<TabulatedProfile>(params_);
            double best = std::max(table(window.lo), table(window.hi));
            for (std::size_t i = 0; i < table.coords().size(); ++i)
                if (window.contains(table.coords()[i])) best = std::max(best, table.values()[i]);
            return best;
        }
        case ProfileKind::kerr_extreme: {
            constexpr int kSamples = 4096;
            double best = -kInf;
            for (int i = 0; i <= kSamples; ++i) {
                const double r = window.lo + window.span() * i / kSamples;
                best = std::max(best, ctilde_sq(r, 0.0));
            }
            return best;
        }
    }
    return 1.0;
}

double ricci_scalar(const SpeedProfile& profile, double background_c, double r, double t,
                    std::optional<double> h) {
    const Interval& range = profile.valid_range();
    const double step = h.value_or(range.finite() ? range.span() / 1e4
                                                  : 1e-4 * profile.length_scale());
    if (!(step > 0.0)) throw DomainError("ricci_scalar: h must be > 0");
    if (!range.contains(r - step) || !range.contains(r + step))
        throw DomainError("ricci_scalar: stencil r±h leaves the valid range");

    double c[3];
    for (int k = 0; k < 3; ++k) {
        const double c2 = profile.ctilde_sq(r + (k - 1) * step, t);
        if (!(c2 > 0.0))
            throw EvaluationError("ricci_scalar: c̃² <= 0 inside the stencil at r=" +
                                  std::to_string(r + (k - 1) * step));
        c[k] = background_c * std::sqrt(c2);
    }
    const double c_dd = (c[2] - 2.0 * c[1] + c[0]) / (step * step);
    return -2.0 * c_dd / c[1];
}

}  // namespace warpline
