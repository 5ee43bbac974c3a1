#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "muskat/config.hpp"
#include "muskat/params.hpp"

namespace muskat {

// Knobs the acceptance suite reads from the run configuration. Resolutions,
// sweep values, and pass windows are fixed inside each criterion; what a
// config may vary is the seed, the solver tolerances, and the fluid
// constants of the evolution criteria.
struct VerifySettings {
    std::uint64_t seed = 1;
    ToleranceSet tolerances{};
    PhysicalParams picard_params;     // global-iteration criterion
    PhysicalParams two_phase_params;  // linear-rate criterion
    VerifySettings();
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    // Wall time is kept out of JSON reports so they stay byte-stable;
    // budget_seconds = 0 means the criterion has no stated time budget.
    double runtime_seconds = 0.0;
    double budget_seconds = 0.0;
    bool within_budget = true;
    std::vector<std::pair<std::string, double>> measured;
    std::string detail;
};

int criterion_count();
CriterionResult run_criterion(int id, const VerifySettings& settings = VerifySettings());
std::vector<CriterionResult> run_acceptance(const VerifySettings& settings = VerifySettings());

}  // namespace muskat
