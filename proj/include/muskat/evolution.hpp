#pragma once

#include <vector>

#include "muskat/besov.hpp"
#include "muskat/dn.hpp"
#include "muskat/field.hpp"
#include "muskat/grid.hpp"
#include "muskat/params.hpp"
#include "muskat/two_phase.hpp"

namespace muskat {

struct EvolutionSettings {
    double tol = 1e-10;  // path-norm residual of the global iteration
    int max_iters = 40;
    double delta = 0.05;  // admissible || eta0 ||_{B^1}
    DnSettings dn{};
    TwoPhaseSettings two_phase{};
};

// Sampled interface trajectory with its norm history. iterations and the
// residual describe how the path was produced; direct constructions leave
// them at zero.
struct SolutionPath {
    std::vector<double> times;
    std::vector<SpectralField> etas;
    PhysicalParams params;
    NormReport report;
    int iterations = 0;
    double residual = 0.0;
    double contraction_ratio = 0.0;
};

// Right side of the mild formulation evaluated on a whole path: decayed
// initial data plus the time integral of the nonlinearity along the input,
// mode by mode with the exponential two-point quadrature. The fixed points
// of this map are the discrete mild solutions.
SolutionPath duhamel_map(const SolutionPath& path, const SpectralField& eta0,
                         const StripGrid& strip, const EvolutionSettings& settings = {});

// Iterates duhamel_map from the linear flow until successive paths differ by
// at most tol in the time-integrated interface norm.
SolutionPath solve_global_picard(const SpectralField& eta0, const PhysicalParams& params,
                                 double T, int K, const StripGrid& strip,
                                 const EvolutionSettings& settings = {});

// One step of the two-stage exponential integrator: exact linear decay,
// predictor/corrector quadrature of the nonlinearity, local error O(dt^3).
SpectralField step_march(const SpectralField& eta_n, double dt,
                         const PhysicalParams& params, const StripGrid& strip,
                         const EvolutionSettings& settings = {});

// K equal steps of step_march with the norm history attached.
SolutionPath march_path(const SpectralField& eta0, const PhysicalParams& params, double T,
                        int K, const StripGrid& strip,
                        const EvolutionSettings& settings = {});

struct StabilityResult {
    double ratio = 0.0;
    bool identical_inputs = false;
};

// Lipschitz quotient of the solution map: path distance over data distance
// for two admissible initial interfaces. Identical inputs short-circuit to
// ratio 0 rather than dividing 0 by 0.
StabilityResult stability_probe(const SpectralField& eta0_a, const SpectralField& eta0_b,
                                double T, int K, const PhysicalParams& params,
                                const StripGrid& strip,
                                const EvolutionSettings& settings = {});

// Time-integrated interface norm of a sampled path segment: the instantaneous
// norm's running sup plus kappa times the accumulated second-order norm.
double path_norm(const std::vector<double>& times, const std::vector<SpectralField>& etas,
                 double kappa, const DyadicPartition& p);

}  // namespace muskat
