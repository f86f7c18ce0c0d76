#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mimetic {

struct GridConfig {
    long nx = 8;
    long ny = 8;
    long nz = 8;
    double dx = 1.0;
    double dy = 1.0;
    double dz = 1.0;
};

/// Coefficient specification: "constant" (all ones scaled by `value`) or
/// "random" (seeded uniform values in [lo, hi]).
struct CoefficientConfig {
    std::string type = "constant";
    double value = 1.0;
    std::uint64_t seed = 1;
    double lo = 0.5;
    double hi = 2.0;
};

/// Initial-condition specification by name; the fields each type reads are
/// documented with the scenarios in run_scenario.
struct InitialConfig {
    std::string type;
    double amplitude = 1.0;
    double width = 0.0;
    std::uint64_t seed = 7;
    long mode = 1;
};

struct VelocityConfig {
    std::string type = "uniform";
    double value = 1.0;
    double max = 1.0;
};

/// Parsed and validated scenario configuration. Exactly one of dt (> 0) or
/// cfl_factor is in effect; has_dt records which.
struct RunConfig {
    std::string scenario;
    long steps = 0;
    bool has_dt = false;
    double dt = 0.0;
    double cfl_factor = 0.9;

    double omega = 1.0;
    double u0 = 1.0;
    double du0 = 0.0;

    long rows = 2;
    long cols = 3;
    std::uint64_t seed = 1;

    long n = 64;
    double dx = 1.0;
    double c = 1.0;

    GridConfig grid;
    CoefficientConfig material;
    CoefficientConfig coefficient;
    bool starred = false;
    InitialConfig initial;
    VelocityConfig velocity;
    long snapshot_every = 0;

    std::vector<std::string> warnings;
};

/// Parses a JSON document into a RunConfig. Unknown scenarios, unknown keys,
/// and invalid values are rejected with messages naming the offending path;
/// suspicious-but-legal settings (cfl_factor above 1) are accepted and
/// recorded in warnings.
RunConfig parse_config(const std::string& text);

}  // namespace mimetic
