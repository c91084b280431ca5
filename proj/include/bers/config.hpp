#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bers/algebra.hpp"
#include "bers/medium.hpp"

namespace bers {

// JSON-backed run configuration. Parsing is strict: unknown keys are rejected
// with their full path, and source terms are rejected explicitly as out of
// scope.

struct MediumConfig {
    std::string kind = "exp";  // "exp" | "poly" | "table"
    double amplitude = 1.0;
    double rate = -2.0;   // exp: eps = amplitude exp(rate x)
    double shift = 1.0;   // poly: eps = amplitude (x + shift)^power
    double power = -4.0;  // poly exponent
    std::vector<double> xs, eps_values;
    double mu = 1.0;
    double x_min = 0.0;
    double x_max = 1.0;
    std::size_t samples = 2001;
};

struct GridConfig {
    double xi_max = 0.6;  // 1D runs use xi,t in [0, xi_max]
    std::size_t nodes = 39;
    int refinements = 3;
};

struct FormalPowersConfig {
    int n_max = 4;
    Hyperbolic a{1.0, 0.0};
};

struct ForcefreeConfig {
    cplx alpha{1.0, 0.0};
    int axis = 1;
    std::size_t nodes = 9;
    double box = 1.0;  // grids are [0, box]^3
};

struct DiracConfig {
    double m = 1.0;
    double omega = 0.5;
    double phi = 0.3;  // constant electric potential
    std::size_t nodes = 9;
    double x_max = 1.0;
};

struct ToleranceConfig {
    double slope_min = 1.9;
    double exact_zero = 1e-10;
};

struct RunConfig {
    std::uint64_t seed = 1234;
    std::string out_dir = ".";
    MediumConfig medium;
    GridConfig grid;
    FormalPowersConfig formal_powers;
    ForcefreeConfig forcefree;
    DiracConfig dirac;
    ToleranceConfig tolerances;
};

// ConfigError on malformed JSON, unknown keys, wrong types, or invalid values
// (mu <= 0, bad kind, bad ranges). An explicit "sources" key anywhere at the
// top level or inside "medium" is rejected as out of scope.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config_file(const std::string& path);

// Profile for the configured medium; ConfigError has already excluded
// non-positive mu and malformed tables.
MediumProfile medium_profile(const MediumConfig& cfg);

}  // namespace bers
