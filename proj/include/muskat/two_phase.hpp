#pragma once

#include "muskat/dn.hpp"
#include "muskat/field.hpp"
#include "muskat/grid.hpp"
#include "muskat/params.hpp"

namespace muskat {

struct TwoPhaseSettings {
    double tol = 1e-10;  // fixed-point residual, measured on |D| of the increment
    int max_iters = 40;
    DnSettings dn{};
};

// Boundary traces of the two-fluid problem at one instant. f_plus - f_minus
// = -(rho_minus - rho_plus) * eta by construction; all fields mean-zero.
struct TwoPhaseState {
    SpectralField eta;
    SpectralField f_minus;
    SpectralField f_plus;
    PhysicalParams params;
    double kappa_eff = 0.0;
    int iterations = 0;
    double residual = 0.0;
};

// Modified lower pressure trace: the fixed point of
//   g |-> |D|^{-1} (mu_- R^+(eta) - mu_+ R^-(eta)) g / (mu_+ + mu_-)
//         - kappa mu_- |D|^{-1} G^+(eta) eta,
// iterated from the forcing term. Leading order kappa mu_- eta.
SpectralField solve_f_minus(const SpectralField& eta, const PhysicalParams& params,
                            const StripGrid& strip, const TwoPhaseSettings& settings = {});

// f^+ = f^- - (rho_minus - rho_plus) eta.
SpectralField recover_f_plus(const SpectralField& f_minus, const SpectralField& eta,
                             const PhysicalParams& params);

// Interface velocity assembled two ways: the split form
//   -kappa |D|eta + kappa R^+(eta)eta - (R^+(eta) + R^-(eta)) f^- / (mu_+ + mu_-)
// and the direct form -(1/mu_-) G^-(eta) f^-. The two are compared and the
// split form returned; they can only drift apart through an unconverged f^-
// or a sign-convention bug, so disagreement throws.
SpectralField two_phase_rhs(const SpectralField& eta, const PhysicalParams& params,
                            const StripGrid& strip, const TwoPhaseSettings& settings = {});

// Full closure at one instant: f^- fixed point, f^+ recovery, solve stats.
TwoPhaseState solve_two_phase(const SpectralField& eta, const PhysicalParams& params,
                              const StripGrid& strip, const TwoPhaseSettings& settings = {});

// Nonlinear part of the velocity: two_phase_rhs plus the kappa |D| eta it
// subtracts. Evaluated per time node inside integrators, so it skips the
// redundant direct-form comparison that two_phase_rhs performs.
SpectralField two_phase_nonlinearity(const SpectralField& eta, const PhysicalParams& params,
                                     const StripGrid& strip,
                                     const TwoPhaseSettings& settings = {});

// Interface velocity of the vacuum-above problem, -(rho_-/mu_-) G^-(eta) eta.
// Not the mu_+ -> 0 limit of the code above; the one-phase problem has its
// own formula and the limit agreement is something the tests measure.
SpectralField one_phase_rhs(const SpectralField& eta, const PhysicalParams& params,
                            const StripGrid& strip, const DnSettings& settings = {});

}  // namespace muskat
