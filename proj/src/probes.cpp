#include <cmath>
#include <string>
#include <vector>

#include "muskat/besov.hpp"
#include "muskat/dn.hpp"
#include "muskat/errors.hpp"
#include "muskat/evolution.hpp"
#include "muskat/fd_oracle.hpp"
#include "muskat/numerics.hpp"
#include "muskat/two_phase.hpp"

namespace muskat {

namespace {

SpectralField scaled(const SpectralField& u, double eps) {
    SpectralField out = u;
    out *= eps;
    return out;
}

double remainder_size(const SpectralField& eta, const SpectralField& f,
                      const ProbeContext& ctx, const DyadicPartition& part) {
    DnOperator op(ctx.strip, eta, ctx.dn);
    return besov_norm(op.remainder(f), 1.0, part);
}

double mild_deviation_size(const SpectralField& eta0, const ProbeContext& ctx,
                           const DyadicPartition& part) {
    EvolutionSettings settings;
    settings.dn = ctx.dn;
    SolutionPath path = solve_global_picard(eta0, ctx.params, ctx.horizon,
                                            ctx.time_nodes, ctx.strip, settings);
    SpectralField gap = path.etas.back();
    const TorusGrid& g = eta0.grid();
    double kappa = ctx.params.kappa();
    SpectralField linear(g);
    for (std::size_t k = 0; k < eta0.size(); ++k) {
        double rate = kappa * std::abs(g.freq(k)) * g.k_min();
        linear.set_coeff(k, std::exp(-rate * ctx.horizon) * eta0.coeff(k));
    }
    gap -= linear;
    return besov_norm(gap, 1.0, part);
}

double pressure_correction_size(const SpectralField& eta, const ProbeContext& ctx,
                                const DyadicPartition& part) {
    TwoPhaseSettings settings;
    settings.dn = ctx.dn;
    SpectralField f = solve_f_minus(eta, ctx.params, ctx.strip, settings);
    SpectralField leading = eta;
    leading *= ctx.params.kappa() * ctx.params.mu_minus;
    f -= leading;
    return besov_norm(f, 1.0, part);
}

}  // namespace

ProbeResult epsilon_scaling_probe(const std::string& quantity,
                                  const std::vector<double>& eps_list,
                                  const SpectralField& base_eta, const SpectralField& base_f,
                                  const ProbeContext& ctx) {
    if (eps_list.size() < 4)
        throw ConfigError("probe: need at least four epsilon values");
    for (double eps : eps_list)
        if (!(eps > 0.0)) throw ConfigError("probe: epsilon values must be positive");

    int which = 0;
    if (quantity == "R_minus_linearity")
        which = 1;
    else if (quantity == "mild_deviation")
        which = 2;
    else if (quantity == "f_minus_correction")
        which = 3;
    else
        throw ConfigError("probe: unknown quantity '" + quantity + "'");

    DyadicPartition part = make_partition(base_eta.grid());
    std::vector<double> sizes;
    sizes.reserve(eps_list.size());
    for (double eps : eps_list) {
        SpectralField eta = scaled(base_eta, eps);
        double value = 0.0;
        switch (which) {
            case 1: value = remainder_size(eta, base_f, ctx, part); break;
            case 2: value = mild_deviation_size(eta, ctx, part); break;
            default: value = pressure_correction_size(eta, ctx, part); break;
        }
        sizes.push_back(value);
    }

    PowerFit fit = power_fit(eps_list, sizes);
    if (fit.r2 < 0.99)
        throw PoorFit("probe '" + quantity + "': log-log fit too loose for a slope claim",
                      fit.r2);
    ProbeResult result;
    result.slope = fit.exponent;
    result.intercept = std::log(fit.prefactor);
    result.r2 = fit.r2;
    return result;
}

}  // namespace muskat
