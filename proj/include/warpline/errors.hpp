#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace warpline {

/// Per-point outcome of flux synthesis. The numeric values are the status
/// codes written to feasibility CSVs; a larger code takes precedence.
enum class FluxStatus : int {
    feasible = 0,
    impedance_warning = 1,
    window_violation = 2,
    arccos_infeasible = 3,
    negative_ctilde = 4,
};

const char* to_string(FluxStatus status);

/// A precondition on an argument or parameter record was not met.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A profile could not be evaluated where it was asked to be
/// (e.g. c̃² <= 0 inside a curvature stencil).
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by synthesize_flux when a single point cannot be realised.
class SynthesisError : public std::runtime_error {
public:
    SynthesisError(FluxStatus status, const std::string& what)
        : std::runtime_error(what), status_(status) {}
    [[nodiscard]] FluxStatus status() const noexcept { return status_; }

private:
    FluxStatus status_;
};

/// A program entry is negative_ctilde or arccos_infeasible.
class SynthesisFailed : public std::runtime_error {
public:
    SynthesisFailed(std::size_t cell, std::size_t time_index, FluxStatus status);
    [[nodiscard]] std::size_t cell() const noexcept { return cell_; }
    [[nodiscard]] std::size_t time_index() const noexcept { return time_index_; }
    [[nodiscard]] FluxStatus status() const noexcept { return status_; }

private:
    std::size_t cell_;
    std::size_t time_index_;
    FluxStatus status_;
};

/// More cells sit at the pi/2 window in one time sample than the array allows.
class HotCellBudgetExceeded : public std::runtime_error {
public:
    HotCellBudgetExceeded(std::size_t count, std::size_t allowed, std::size_t time_index);
    [[nodiscard]] std::size_t count() const noexcept { return count_; }
    [[nodiscard]] std::size_t allowed() const noexcept { return allowed_; }
    [[nodiscard]] std::size_t time_index() const noexcept { return time_index_; }

private:
    std::size_t count_;
    std::size_t allowed_;
    std::size_t time_index_;
};

class SimulationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CflViolation : public SimulationError {
public:
    using SimulationError::SimulationError;
};

class StabilityViolation : public SimulationError {
public:
    using SimulationError::SimulationError;
};

class SingularInductance : public SimulationError {
public:
    SingularInductance(std::size_t cell, double time);
    [[nodiscard]] std::size_t cell() const noexcept { return cell_; }

private:
    std::size_t cell_;
};

class FrontNotFound : public SimulationError {
public:
    using SimulationError::SimulationError;
};

/// Configuration could not be turned into valid module types. `path` is the
/// dotted field path of the offending entry.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string path, const std::string& message)
        : std::runtime_error(path.empty() ? message : path + ": " + message),
          path_(std::move(path)) {}
    [[nodiscard]] const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace warpline
