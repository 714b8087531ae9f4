#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "slitfringe/numerics.hpp"
#include "slitfringe/schrodinger.hpp"
#include "slitfringe/types.hpp"

namespace slitfringe {

enum class Method { se, nlad_factorized, nlad_spectral };

/// One scenario: geometry, NLAD parameters, evaluation times, grid policy,
/// methods, optional per-time dilation factors, and output location.
struct ScenarioConfig {
    double slit_s = 1.0;
    double slit_b = 0.1;
    NladParams nlad = standard_nlad_params();
    std::vector<double> times;   // as given; divided by pi when pi_units
    bool pi_units = true;
    std::optional<Grid> grid;    // explicit grid; otherwise the per-time default
    std::vector<Method> methods = {Method::se, Method::nlad_factorized,
                                   Method::nlad_spectral};
    std::vector<double> dilation_factors;  // empty, or one per time (0 = none)
    Tolerance tolerances;
    std::filesystem::path output_dir = "out";

    double time_at(std::size_t i) const;
    /// Default grid for evaluation time t: [-40 m, 40 m] at dx = 0.01 m with
    /// m = max(1, pi t).
    Grid grid_for(double t) const;
    bool has_method(Method m) const;
    void validate() const;  // throws ConfigError
};

/// Parses the JSON scenario text. Missing keys take standard-parameter
/// defaults; unknown keys are rejected. Throws ConfigError.
ScenarioConfig parse_config(const std::string& text);

struct RunSummary {
    bool ok = true;
    std::vector<std::string> failures;
    nlohmann::json data;
};

/// Executes the scenario: one CSV per time plus summary.json in output_dir,
/// all written atomically. Numeric failure (mass deviation > 100x tolerance
/// or positivity violation > 1e-8) sets ok = false and leaves a FAILED
/// sentinel file next to the partial outputs.
RunSummary run_scenario(const ScenarioConfig& cfg);

struct BoundsReport {
    std::vector<DilationReport> reports;
    bool all_hold = true;
};

/// Dilation-inequality check for each (t, T) pair on [-40 t, 40 t] at
/// dx = 0.02 t.
BoundsReport check_bounds(const ScenarioConfig& cfg,
                          const std::vector<std::pair<double, double>>& pairs);

}  // namespace slitfringe
