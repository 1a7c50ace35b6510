#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fup/bounds.hpp"
#include "fup/operators.hpp"

namespace fup {

// Radial-family sweep: spectra of the Daubechies operator on radial Cantor
// iterates against the density-bound pipeline and the schedule product bound.
struct RadialFupConfig {
    std::int64_t M = 3;
    std::vector<int> alphabet = {0, 2};
    double radius_coeff = 1.0; // R^{2}(n) = radius_coeff * M^{n/2}
    double c1 = 1.0;
    double c2 = 1.0;
    int n_min = 0;
    int n_max = 8;
    std::vector<double> r_grid = default_r_grid();
    double N = 4.0;
    double p = 2.0;
    double r0_fraction = 0.9;
    std::uint64_t seed = 1;

    static std::vector<double> default_r_grid();
};

struct RadialFupRow {
    int n = 0;
    double radius = 0.0;
    double norm = 0.0;
    double bound = 0.0;
    double asymptote = 0.0;
    double ratio = 0.0; // norm / (|A|/M)^{n/2}
    double schedule_bound = 0.0;
    bool pass = false;
};

struct RadialFupResult {
    std::vector<RadialFupRow> rows;
    double gamma = 0.0;
    bool pass = false;
    std::string csv;
};

RadialFupResult run_radial_fup(const RadialFupConfig& config);

// Gabor-multiplier sweep on the symmetric product family with lattice spacing
// a(n) = L(n) M^{-n}.
struct GaborFupConfig {
    std::int64_t M = 3;
    std::vector<int> alphabet = {0, 2};
    double length_coeff = 1.0; // L(n) = length_coeff * M^{n/2}
    int n_min = 0;
    int n_max = 5;
    int matrix_cap = kDefaultMatrixCap;
    double r0_factor = 1.0;     // ball radius R0 = r0_factor * h in the overlap step
    double thicken_ratio = 2.0; // scale pick R = ratio * r / nu when thickening
    double p = 2.0;
    double r0_fraction = 0.9;
    std::uint64_t seed = 1;
};

struct GaborFupRow {
    int n = 0;
    double h = 0.0;
    int points = 0;
    double norm = 0.0;
    double bound = 0.0; // overlap prefactor times schedule product bound
    bool pass = false;
    double beta_hat = 0.0;
    bool condition_h = false;
    bool below_threshold = false;
};

struct GaborFupResult {
    std::vector<GaborFupRow> rows;
    double beta_hat = 0.0;
    bool pass = false;
    std::string csv;
};

GaborFupResult run_gabor_fup(const GaborFupConfig& config);

// Aggregated invariant suites; an empty selection runs all regular suites.
// The "fixture-subadditivity-violation" suite is opt-in and fails by design.
struct PropertySuiteResult {
    bool pass = true;
    nlohmann::json report;
};

PropertySuiteResult run_property_suites(const std::vector<std::string>& selection,
                                        std::uint64_t seed = 1);

std::vector<std::string> property_suite_names();

// Flat JSON config + "key=value" overrides; CLI wins over file over defaults.
nlohmann::json load_config_file(const std::string& path);
void apply_overrides(nlohmann::json& config, const std::vector<std::string>& overrides);
RadialFupConfig radial_config_from_json(const nlohmann::json& j);
GaborFupConfig gabor_config_from_json(const nlohmann::json& j);

} // namespace fup
