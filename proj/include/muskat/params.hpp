#pragma once

namespace muskat {

enum class ProblemKind { OnePhase, TwoPhase };

// Fluid constants. The one-phase problem has vacuum above the interface and
// is handled by its own formulas throughout the library; it is not the
// mu_plus -> 0 limit of the two-phase code path, even though the effective
// coefficients agree there.
struct PhysicalParams {
    ProblemKind kind = ProblemKind::OnePhase;
    double mu_minus = 1.0;
    double rho_minus = 1.0;
    double mu_plus = 0.0;
    double rho_plus = 0.0;

    double density_jump() const { return rho_minus - rho_plus; }

    // Decay coefficient of the linearized interface motion. Positive exactly
    // in the gravity-stable configuration, which validate() enforces.
    double kappa() const {
        if (kind == ProblemKind::OnePhase) return rho_minus / mu_minus;
        return density_jump() / (mu_plus + mu_minus);
    }

    void validate() const;
};

}  // namespace muskat
