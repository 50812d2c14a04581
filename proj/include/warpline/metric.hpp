#pragma once

// =============================================================================
// Metric catalog
// =============================================================================
// Dimensionless squared light-speed profiles c̃²(r,t) for the reduced
// 1+1-D sections ds² = -c²(r,t)dt² + dr², with c(r,t)² = c² · c̃²(r,t).
// =============================================================================

#include <cmath>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace warpline {

/// Closed coordinate interval. Either end may be infinite.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    [[nodiscard]] double span() const { return hi - lo; }
    [[nodiscard]] bool contains(double x) const { return x >= lo && x <= hi; }
    [[nodiscard]] bool contains(const Interval& other) const {
        return other.lo >= lo && other.hi <= hi;
    }
    [[nodiscard]] bool finite() const { return std::isfinite(lo) && std::isfinite(hi); }
};

/// Warp bubble moving along x. `light_speed` is the flat background c that
/// sets the bubble velocity v_s = vs_over_c · light_speed.
struct AlcubierreParams {
    double vs_over_c = 0.0;
    double bubble_radius = 1.0;
    double sigma = 8.0;
    double x_s0 = 0.0;
    bool top_hat = false;
    double light_speed = 1.0;

    void validate() const;
};

struct GodelParams {
    double a = 1.0;

    void validate() const;
};

/// Extreme Kerr (spin a = M) in geometric units. `theta` selects the slice
/// and is never a coordinate.
struct KerrExtremeParams {
    double mass = 1.0;
    double theta = 0.0;

    void validate() const;
};

// Alcubierre wall function f(r_s); exactly 1 / 0 in the top-hat limit.
[[nodiscard]] double shape_function(double r_s, const AlcubierreParams& params);

/// Bubble centre x_s(t) = x_s0 + v_s t.
[[nodiscard]] double bubble_center(double t, const AlcubierreParams& params);

/// (1 + (v_s/c)·f(|x - x_s(t)|))².
[[nodiscard]] double ctilde_sq_alcubierre(double x, double t, const AlcubierreParams& params);

/// 1 + (r/2a)².
[[nodiscard]] double ctilde_sq_godel(double r, const GodelParams& params);

/// (1 - 2Mr/Σ)(M - r)²/Σ with Σ = r² + M²cos²θ. Negative inside the slice's
/// ergoregion; returned as-is.
[[nodiscard]] double ctilde_sq_kerr_extreme(double r, const KerrExtremeParams& params);

/// User-supplied profile sampled at strictly increasing r, linearly
/// interpolated, undefined outside [r.front(), r.back()].
class TabulatedProfile {
public:
    TabulatedProfile(std::vector<double> r, std::vector<double> ctilde_sq);

    /// Two-column CSV (r, ctilde_sq). Blank lines, '#' comments and a
    /// non-numeric header row are skipped.
    static TabulatedProfile from_csv(std::istream& in);
    static TabulatedProfile from_csv_file(const std::string& path);

    [[nodiscard]] double operator()(double r) const;
    [[nodiscard]] Interval range() const { return {r_.front(), r_.back()}; }
    [[nodiscard]] const std::vector<double>& coords() const { return r_; }
    [[nodiscard]] const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> r_;
    std::vector<double> values_;
};

enum class ProfileKind { flat, alcubierre, godel, kerr_extreme, tabulated };

const char* to_string(ProfileKind kind);

class SpeedProfile {
public:
    using Params = std::variant<std::monostate, AlcubierreParams, GodelParams,
                                KerrExtremeParams, TabulatedProfile>;

    static SpeedProfile flat();
    static SpeedProfile alcubierre(const AlcubierreParams& params);
    static SpeedProfile godel(const GodelParams& params);
    static SpeedProfile kerr_extreme(const KerrExtremeParams& params);
    static SpeedProfile tabulated(TabulatedProfile table);

    /// Restrict the validity range; `range` must lie inside the current one.
    [[nodiscard]] SpeedProfile with_range(const Interval& range) const;

    [[nodiscard]] ProfileKind kind() const { return kind_; }
    [[nodiscard]] const Params& params() const { return params_; }
    [[nodiscard]] bool time_dependent() const { return kind_ == ProfileKind::alcubierre; }
    [[nodiscard]] const Interval& valid_range() const { return valid_range_; }

    /// Characteristic length (R, a, M, table span or 1).
    [[nodiscard]] double length_scale() const;

    /// Throws DomainError when r is outside valid_range.
    [[nodiscard]] double ctilde_sq(double r, double t = 0.0) const;

    /// Upper bound of c̃² on `window` over all times.
    [[nodiscard]] double max_ctilde_sq(const Interval& window) const;

private:
    SpeedProfile(ProfileKind kind, Params params, Interval range);

    ProfileKind kind_;
    Params params_;
    Interval valid_range_;
};

/// Scalar curvature R = -2 c''/c of the reduced metric at (r,t), where
/// c = background_c·√c̃² and c'' is a central second difference. The default
/// step is valid_range.span()/1e4, or 1e-4·length_scale() on an unbounded
/// range.
[[nodiscard]] double ricci_scalar(const SpeedProfile& profile, double background_c, double r,
                                  double t, std::optional<double> h = std::nullopt);

}  // namespace warpline
