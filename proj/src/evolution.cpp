#include "muskat/evolution.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "muskat/errors.hpp"
#include "muskat/multipliers.hpp"
#include "muskat/parallel.hpp"
#include "muskat/products.hpp"
#include "muskat/quadrature.hpp"

namespace muskat {

namespace {

void check_settings(const EvolutionSettings& s) {
    if (!(s.tol > 0.0)) throw ConfigError("evolution: tol must be positive");
    if (s.max_iters < 1) throw ConfigError("evolution: max_iters must be at least 1");
    if (!(s.delta > 0.0)) throw ConfigError("evolution: delta must be positive");
}

SpectralField checked_state(const SpectralField& eta) {
    if (eta.mean() != std::complex<double>(0.0, 0.0))
        throw ConfigError("evolution: interface must be mean-free");
    return band_truncate(eta);
}

SpectralField node_velocity(const SpectralField& eta, const PhysicalParams& params,
                            const StripGrid& strip, const EvolutionSettings& s) {
    if (params.kind == ProblemKind::OnePhase) {
        const DnOperator op(strip, eta, s.dn);
        SpectralField n = op.remainder(op.eta());
        n *= -params.kappa();
        return n;
    }
    return two_phase_nonlinearity(eta, params, strip, s.two_phase);
}

// Nonlinearity at every node. A smallness failure is reported with the node
// it happened at.
std::vector<SpectralField> node_velocities(const std::vector<SpectralField>& etas,
                                           const PhysicalParams& params,
                                           const StripGrid& strip,
                                           const EvolutionSettings& s) {
    std::vector<SpectralField> out(etas.size(), SpectralField(etas[0].grid()));
    parallel_for(etas.size(), [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            try {
                out[i] = node_velocity(etas[i], params, strip, s);
            } catch (const SmallnessViolated& err) {
                throw SmallnessViolated(
                    "evolution: node " + std::to_string(i) + ": " + err.what(),
                    err.measured, err.threshold);
            }
        }
    });
    return out;
}

// Decayed data plus the accumulated integral of the sampled nonlinearity,
// mode by mode. times and vel share the node set; the first output is eta0.
std::vector<SpectralField> integrate_path(const std::vector<double>& times,
                                          const std::vector<SpectralField>& vel,
                                          const SpectralField& eta0, double kappa) {
    const TorusGrid& g = eta0.grid();
    const std::size_t n = g.size();

    std::vector<double> rate(n);
    for (std::size_t k = 0; k < n; ++k)
        rate[k] = kappa * std::abs(static_cast<double>(g.freq(k))) * g.k_min();

    std::vector<SpectralField> out;
    out.reserve(times.size());
    out.push_back(eta0);
    std::vector<std::complex<double>> acc(n, 0.0);
    for (std::size_t i = 1; i < times.size(); ++i) {
        const double h = times[i] - times[i - 1];
        SpectralField next(g);
        for (std::size_t k = 0; k < n; ++k) {
            const QuadWeights w = exp_quadrature_weights(rate[k], h);
            acc[k] = std::exp(-rate[k] * h) * acc[k] + w.wa * vel[i - 1].coeff(k) +
                     w.wb * vel[i].coeff(k);
            next.set_coeff(k, std::exp(-rate[k] * times[i]) * eta0.coeff(k) + acc[k]);
        }
        out.push_back(std::move(next));
    }
    return out;
}

SolutionPath assemble_path(std::vector<double> times, std::vector<SpectralField> etas,
                           const PhysicalParams& params, int iterations, double residual,
                           double ratio) {
    const DyadicPartition p = make_partition(etas[0].grid());
    NormReport report = make_norm_report(times, etas, params.kappa(), p);
    return SolutionPath{std::move(times), std::move(etas), params, std::move(report),
                        iterations,       residual,        ratio};
}

void check_path_shape(const SolutionPath& path) {
    if (path.times.size() != path.etas.size() || path.times.size() < 2)
        throw ConfigError("evolution: path needs one field per node and at least two nodes");
    if (path.times.front() != 0.0)
        throw ConfigError("evolution: paths start at time zero");
    for (std::size_t i = 1; i < path.times.size(); ++i)
        if (!(path.times[i] > path.times[i - 1]))
            throw DegeneratePath("evolution: node times must increase");
}

std::vector<double> uniform_times(double T, int K) {
    std::vector<double> t(static_cast<std::size_t>(K) + 1);
    for (int i = 0; i <= K; ++i) t[static_cast<std::size_t>(i)] = T * i / K;
    return t;
}

}  // namespace

double path_norm(const std::vector<double>& times, const std::vector<SpectralField>& etas,
                 double kappa, const DyadicPartition& p) {
    return chemin_lerner_norm(times, etas, Lq::inf, 1.0, p) +
           kappa * chemin_lerner_norm(times, etas, Lq::one, 2.0, p);
}

SolutionPath duhamel_map(const SolutionPath& path, const SpectralField& eta0,
                         const StripGrid& strip, const EvolutionSettings& settings) {
    check_settings(settings);
    check_path_shape(path);
    path.params.validate();
    const SpectralField e0 = checked_state(eta0);
    const std::vector<SpectralField> vel =
        node_velocities(path.etas, path.params, strip, settings);
    return assemble_path(path.times, integrate_path(path.times, vel, e0, path.params.kappa()),
                         path.params, 0, 0.0, 0.0);
}

SolutionPath solve_global_picard(const SpectralField& eta0, const PhysicalParams& params,
                                 double T, int K, const StripGrid& strip,
                                 const EvolutionSettings& settings) {
    check_settings(settings);
    params.validate();
    if (!(T > 0.0)) throw NegativeTime("evolution: horizon must be positive");
    if (K < 1) throw ConfigError("evolution: need at least one time step");

    const SpectralField e0 = checked_state(eta0);
    const DyadicPartition p = make_partition(e0.grid());
    const double b1 = besov_norm(e0, 1.0, p);
    if (b1 > settings.delta)
        throw DataTooLarge("evolution: initial interface too large for the global iteration",
                           b1, settings.delta);

    const double kappa = params.kappa();
    const std::vector<double> times = uniform_times(T, K);

    // iterate zero: the linear flow
    std::vector<SpectralField> zero_vel(times.size(), SpectralField(e0.grid()));
    std::vector<SpectralField> etas = integrate_path(times, zero_vel, e0, kappa);

    std::vector<double> history;
    bool converged = false;
    int iterations = 0;
    for (int it = 1; it <= settings.max_iters; ++it) {
        const std::vector<SpectralField> vel = node_velocities(etas, params, strip, settings);
        std::vector<SpectralField> next = integrate_path(times, vel, e0, kappa);
        std::vector<SpectralField> diff;
        diff.reserve(next.size());
        for (std::size_t i = 0; i < next.size(); ++i) diff.push_back(next[i] - etas[i]);
        history.push_back(path_norm(times, diff, kappa, p));
        etas = std::move(next);
        iterations = it;
        if (history.back() <= settings.tol) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw NoConvergence("evolution: global iteration missed tolerance", iterations,
                            history.back());

    double ratio = 0.0;
    for (std::size_t i = 1; i < history.size(); ++i)
        if (history[i - 1] > 0.0) ratio = std::max(ratio, history[i] / history[i - 1]);

    return assemble_path(times, std::move(etas), params, iterations, history.back(), ratio);
}

SpectralField step_march(const SpectralField& eta_n, double dt,
                         const PhysicalParams& params, const StripGrid& strip,
                         const EvolutionSettings& settings) {
    check_settings(settings);
    params.validate();
    if (!(dt > 0.0)) throw NegativeTime("evolution: step size must be positive");

    const SpectralField en = checked_state(eta_n);
    const TorusGrid& g = en.grid();
    const double kappa = params.kappa();

    const SpectralField vn = node_velocity(en, params, strip, settings);

    SpectralField pred(g);
    for (std::size_t k = 0; k < g.size(); ++k) {
        const double r = kappa * std::abs(static_cast<double>(g.freq(k))) * g.k_min();
        const QuadWeights w = exp_quadrature_weights(r, dt);
        pred.set_coeff(k, std::exp(-r * dt) * en.coeff(k) + (w.wa + w.wb) * vn.coeff(k));
    }

    const SpectralField vp = node_velocity(pred, params, strip, settings);

    SpectralField out(g);
    for (std::size_t k = 0; k < g.size(); ++k) {
        const double r = kappa * std::abs(static_cast<double>(g.freq(k))) * g.k_min();
        const QuadWeights w = exp_quadrature_weights(r, dt);
        out.set_coeff(k, std::exp(-r * dt) * en.coeff(k) + w.wa * vn.coeff(k) +
                             w.wb * vp.coeff(k));
    }
    return out;
}

SolutionPath march_path(const SpectralField& eta0, const PhysicalParams& params, double T,
                        int K, const StripGrid& strip, const EvolutionSettings& settings) {
    check_settings(settings);
    params.validate();
    if (!(T > 0.0)) throw NegativeTime("evolution: horizon must be positive");
    if (K < 1) throw ConfigError("evolution: need at least one time step");

    const std::vector<double> times = uniform_times(T, K);
    std::vector<SpectralField> etas;
    etas.reserve(times.size());
    etas.push_back(checked_state(eta0));
    for (int i = 0; i < K; ++i)
        etas.push_back(step_march(etas.back(), times[static_cast<std::size_t>(i) + 1] -
                                                    times[static_cast<std::size_t>(i)],
                                  params, strip, settings));
    return assemble_path(times, std::move(etas), params, 0, 0.0, 0.0);
}

StabilityResult stability_probe(const SpectralField& eta0_a, const SpectralField& eta0_b,
                                double T, int K, const PhysicalParams& params,
                                const StripGrid& strip, const EvolutionSettings& settings) {
    const SpectralField a = checked_state(eta0_a);
    const SpectralField b = checked_state(eta0_b);
    if ((a - b).max_abs() == 0.0) return StabilityResult{0.0, true};

    const SolutionPath pa = solve_global_picard(a, params, T, K, strip, settings);
    const SolutionPath pb = solve_global_picard(b, params, T, K, strip, settings);
    std::vector<SpectralField> diff;
    diff.reserve(pa.etas.size());
    for (std::size_t i = 0; i < pa.etas.size(); ++i) diff.push_back(pa.etas[i] - pb.etas[i]);

    const DyadicPartition p = make_partition(a.grid());
    const double num = path_norm(pa.times, diff, params.kappa(), p);
    const double den = besov_norm(a - b, 1.0, p);
    return StabilityResult{num / den, false};
}

}  // namespace muskat
