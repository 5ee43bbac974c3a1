#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "muskat/field.hpp"
#include "muskat/grid.hpp"
#include "muskat/params.hpp"

namespace muskat {

// Thresholds the analysis leaves symbolic. They live in the config schema so
// every report can state exactly which numbers a run was held to.
struct ToleranceSet {
    double picard_tol = 1e-10;
    double dn_tol = 1e-12;
    double c_star = 0.1;
    double delta = 0.05;
};

// One run of the front door, parsed from a JSON file with a fixed schema
// (see docs in README). Unknown keys anywhere are rejected; `K` and `dt`
// are mutually exclusive and the one not given is derived.
struct RunConfig {
    ProblemKind problem = ProblemKind::OnePhase;
    int d = 1;
    int N = 0;
    double L = 0.0;
    int M = 192;      // vertical strip nodes
    double Z = 28.0;  // strip depth
    double T = 0.0;
    int K = 0;
    double dt = 0.0;
    bool dt_given = false;
    PhysicalParams params;
    std::vector<Mode> eta0_modes;
    std::string eta0_file;  // empty unless the modes came from a file
    ToleranceSet tolerances;
    std::uint64_t seed = 1;
    std::string output_dir = "out";
};

// Parse and schema-validate. Throws ConfigError with the offending key path.
RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);

// Echo of every field (given or defaulted) as pretty JSON, key order fixed.
std::string config_json(const RunConfig& config);

TorusGrid config_grid(const RunConfig& config);
StripGrid config_strip(const RunConfig& config);

// Initial interface from the mode list; mean-free by construction since the
// schema rejects k = 0 entries.
SpectralField build_eta0(const RunConfig& config);

}  // namespace muskat
