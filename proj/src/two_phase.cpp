#include "muskat/two_phase.hpp"

#include <cmath>
#include <utility>

#include "muskat/errors.hpp"
#include "muskat/multipliers.hpp"

namespace muskat {

namespace {

void check_settings(const TwoPhaseSettings& s) {
    if (!(s.tol > 0.0)) throw ConfigError("two-phase: tol must be positive");
    if (s.max_iters < 1) throw ConfigError("two-phase: max_iters must be at least 1");
}

void check_two_phase(const PhysicalParams& params) {
    params.validate();
    if (params.kind != ProblemKind::TwoPhase)
        throw ConfigError("two-phase: constants describe a one-phase problem");
}

// Both boundary operators for one interface. The upper one comes from the
// lower one on the reflected interface.
struct Closure {
    DnOperator lower;
    DnOperator upper_refl;

    Closure(const SpectralField& eta, const StripGrid& strip, const DnSettings& dn)
        : lower(strip, eta, dn), upper_refl(strip, negate(eta), dn) {}

    static SpectralField negate(const SpectralField& eta) {
        SpectralField r = eta;
        r *= -1.0;
        return r;
    }

    SpectralField r_plus(const SpectralField& g) const {
        SpectralField r = upper_refl.remainder(g);
        r *= -1.0;
        return r;
    }

    SpectralField g_plus(const SpectralField& g) const {
        SpectralField r = upper_refl.apply(g);
        r *= -1.0;
        return r;
    }
};

struct PressureSolve {
    SpectralField f_minus;
    int iterations = 0;
    double residual = 0.0;
};

PressureSolve iterate_pressure(const Closure& ops, const SpectralField& eta,
                               const PhysicalParams& params, const TwoPhaseSettings& s) {
    const double denom = params.mu_plus + params.mu_minus;
    const double kappa = params.kappa();

    SpectralField forcing = inverse_modulus(ops.g_plus(eta));
    forcing *= -kappa * params.mu_minus;

    PressureSolve out{forcing, 0, 0.0};
    for (int it = 1; it <= s.max_iters; ++it) {
        SpectralField num = ops.r_plus(out.f_minus);
        num *= params.mu_minus;
        SpectralField rm = ops.lower.remainder(out.f_minus);
        rm *= -params.mu_plus;
        num += rm;
        num *= 1.0 / denom;
        SpectralField next = inverse_modulus(num);
        next += forcing;

        out.residual = modulus(next - out.f_minus).max_abs();
        out.iterations = it;
        out.f_minus = std::move(next);
        if (out.residual <= s.tol) return out;
    }
    throw NoConvergence("two-phase: pressure iteration missed tolerance", out.iterations,
                        out.residual);
}

}  // namespace

SpectralField solve_f_minus(const SpectralField& eta, const PhysicalParams& params,
                            const StripGrid& strip, const TwoPhaseSettings& settings) {
    return solve_two_phase(eta, params, strip, settings).f_minus;
}

SpectralField recover_f_plus(const SpectralField& f_minus, const SpectralField& eta,
                             const PhysicalParams& params) {
    if (!(f_minus.grid() == eta.grid()))
        throw GridMismatch("two-phase: trace and interface grids differ");
    SpectralField jump = eta;
    jump *= -params.density_jump();
    return f_minus + jump;
}

TwoPhaseState solve_two_phase(const SpectralField& eta, const PhysicalParams& params,
                              const StripGrid& strip, const TwoPhaseSettings& settings) {
    check_settings(settings);
    check_two_phase(params);
    const Closure ops(eta, strip, settings.dn);
    PressureSolve sol = iterate_pressure(ops, ops.lower.eta(), params, settings);

    TwoPhaseState state{ops.lower.eta(),
                        sol.f_minus,
                        recover_f_plus(sol.f_minus, ops.lower.eta(), params),
                        params,
                        params.kappa(),
                        sol.iterations,
                        sol.residual};
    return state;
}

namespace {

// kappa R^+(eta)eta - (R^+(eta) + R^-(eta)) f^- / (mu_+ + mu_-), the
// quadratic part of the split velocity.
SpectralField assemble_nonlinearity(const Closure& ops, const SpectralField& f,
                                    const PhysicalParams& params) {
    SpectralField bounce = ops.r_plus(ops.lower.eta());
    bounce *= params.kappa();
    SpectralField drag = ops.r_plus(f) + ops.lower.remainder(f);
    drag *= -1.0 / (params.mu_plus + params.mu_minus);
    bounce += drag;
    return bounce;
}

}  // namespace

SpectralField two_phase_rhs(const SpectralField& eta, const PhysicalParams& params,
                            const StripGrid& strip, const TwoPhaseSettings& settings) {
    check_settings(settings);
    check_two_phase(params);

    const Closure ops(eta, strip, settings.dn);
    const SpectralField f = iterate_pressure(ops, ops.lower.eta(), params, settings).f_minus;

    SpectralField split = modulus(ops.lower.eta());
    split *= -params.kappa();
    split += assemble_nonlinearity(ops, f, params);

    SpectralField direct = ops.lower.apply(f);
    direct *= -1.0 / params.mu_minus;

    const double gap = (split - direct).max_abs();
    if (gap > 10.0 * settings.tol)
        throw FormMismatch("two-phase: split and direct velocity forms disagree");
    return split;
}

SpectralField two_phase_nonlinearity(const SpectralField& eta, const PhysicalParams& params,
                                     const StripGrid& strip,
                                     const TwoPhaseSettings& settings) {
    check_settings(settings);
    check_two_phase(params);
    const Closure ops(eta, strip, settings.dn);
    const SpectralField f = iterate_pressure(ops, ops.lower.eta(), params, settings).f_minus;
    return assemble_nonlinearity(ops, f, params);
}

SpectralField one_phase_rhs(const SpectralField& eta, const PhysicalParams& params,
                            const StripGrid& strip, const DnSettings& settings) {
    params.validate();
    if (params.kind != ProblemKind::OnePhase)
        throw ConfigError("one-phase: constants describe a two-phase problem");
    const DnOperator op(strip, eta, settings);
    SpectralField rhs = op.apply(op.eta());
    rhs *= -params.kappa();
    return rhs;
}

}  // namespace muskat
