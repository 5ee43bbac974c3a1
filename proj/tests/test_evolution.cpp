#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "doctest.h"
#include "muskat/besov.hpp"
#include "muskat/errors.hpp"
#include "muskat/evolution.hpp"
#include "muskat/field.hpp"
#include "muskat/grid.hpp"
#include "muskat/numerics.hpp"
#include "muskat/params.hpp"
#include "muskat/products.hpp"

using namespace muskat;

namespace {

constexpr double pi = std::numbers::pi;

SpectralField cosine(const TorusGrid& g, int k, double a, double phase = 0.0) {
    return SpectralField::from_modes(g, {Mode{{k, 0}, a, phase}});
}

PhysicalParams one_phase() {
    PhysicalParams p;
    p.kind = ProblemKind::OnePhase;
    return p;  // kappa = 1
}

PhysicalParams two_fluids() {
    PhysicalParams p;
    p.kind = ProblemKind::TwoPhase;
    p.mu_minus = 1.0;
    p.mu_plus = 1.0;
    p.rho_minus = 2.0;
    p.rho_plus = 0.0;
    return p;  // kappa = 1
}

// e^{-i k a} phase twist of every mode: the field translated by a.
SpectralField shifted(const SpectralField& u, double a) {
    const TorusGrid& g = u.grid();
    SpectralField out(g);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u.coeff(i) == 0.0) continue;
        const double k = g.freq(i) * g.k_min();
        out.set_coeff(i, u.coeff(i) * std::exp(std::complex<double>(0.0, -k * a)));
    }
    return out;
}

double terminal_gap(const SolutionPath& a, const SolutionPath& b) {
    return (a.etas.back() - b.etas.back()).max_abs();
}

}  // namespace

TEST_CASE("zero data stays zero") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 96);
    const SolutionPath path =
        solve_global_picard(SpectralField(g), one_phase(), 1.0, 8, strip);
    CHECK(path.iterations == 1);
    for (const SpectralField& e : path.etas) CHECK(e.max_abs() == 0.0);
    CHECK(path.report.x1_kappa.back() == 0.0);

    const SolutionPath marched =
        march_path(SpectralField(g), one_phase(), 1.0, 4, strip);
    for (const SpectralField& e : marched.etas) CHECK(e.max_abs() == 0.0);
}

TEST_CASE("integral map on a zero path is the decayed data") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 96);
    const SpectralField eta0 = cosine(g, 1, 1e-3) + cosine(g, 3, 5e-4);
    const double kappa = one_phase().kappa();

    SolutionPath zeros;
    zeros.times = {0.0, 0.25, 0.5, 0.75, 1.0};
    zeros.etas.assign(5, SpectralField(g));
    zeros.params = one_phase();

    const SolutionPath out = duhamel_map(zeros, eta0, strip);
    for (std::size_t i = 0; i < out.times.size(); ++i) {
        SpectralField expected(g);
        for (std::size_t k = 0; k < eta0.size(); ++k) {
            const double rate = kappa * std::abs(g.freq(k)) * g.k_min();
            expected.set_coeff(k, std::exp(-rate * out.times[i]) * eta0.coeff(k));
        }
        CHECK((out.etas[i] - expected).max_abs() <= 1e-15);
    }
}

TEST_CASE("one integral application leaves the linear flow at quadratic order") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 128);
    const DyadicPartition p = make_partition(g);
    std::vector<double> devs;
    for (double a : {1e-2, 1e-3}) {
        const SpectralField eta0 = cosine(g, 1, a) + cosine(g, 2, 0.5 * a);
        SolutionPath frozen;
        frozen.times = {0.0, 0.25, 0.5};
        frozen.etas.assign(3, eta0);
        frozen.params = one_phase();

        SolutionPath zeros = frozen;
        zeros.etas.assign(3, SpectralField(g));

        const SolutionPath curved = duhamel_map(frozen, eta0, strip);
        const SolutionPath linear = duhamel_map(zeros, eta0, strip);
        std::vector<SpectralField> diff;
        for (std::size_t i = 0; i < curved.etas.size(); ++i)
            diff.push_back(curved.etas[i] - linear.etas[i]);
        devs.push_back(chemin_lerner_norm(curved.times, diff, Lq::inf, 1.0, p));
    }
    CHECK(devs[1] > 0.0);
    const double drop = devs[0] / devs[1];  // amplitude ratio 10, bilinear term -> 100
    CHECK(drop > 60.0);
    CHECK(drop < 160.0);
}

TEST_CASE("march of a single tiny mode is the exact semigroup decay") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 96);
    const double a = 1e-8;
    const SpectralField eta0 = cosine(g, 2, a);
    const SpectralField out = step_march(eta0, 0.3, one_phase(), strip);
    const SpectralField expected = cosine(g, 2, a * std::exp(-2.0 * 0.3));
    CHECK((out - expected).max_abs() <= 1e-15);
}

TEST_CASE("march self-converges at second order") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 96);
    const SpectralField eta0 = cosine(g, 1, 0.01) + cosine(g, 2, 0.005);
    const double T = 0.5;

    const SolutionPath ref = march_path(eta0, one_phase(), T, 64, strip);
    std::vector<double> dts, errs;
    for (int K : {8, 16}) {
        const SolutionPath run = march_path(eta0, one_phase(), T, K, strip);
        dts.push_back(T / K);
        errs.push_back(terminal_gap(run, ref));
    }
    const double order = std::log2(errs[0] / errs[1]);
    CHECK(order > 1.8);
    CHECK(order < 2.2);
}

TEST_CASE("global iteration contracts and stays within the data bound") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 128);
    const DyadicPartition p = make_partition(g);
    const SpectralField eta0 = cosine(g, 1, 0.02) + cosine(g, 2, 0.008);
    const double b1 = besov_norm(eta0, 1.0, p);
    REQUIRE(b1 <= 0.05);

    const SolutionPath path = solve_global_picard(eta0, one_phase(), 1.0, 16, strip);
    CHECK(path.residual <= 1e-10);
    CHECK(path.contraction_ratio <= 0.5);
    CHECK(path.iterations <= 25);
    CHECK(path.report.x1_kappa.back() <= 2.2 * b1);
    CHECK((path.etas.front() - band_truncate(eta0)).max_abs() == 0.0);
}

TEST_CASE("two independent time discretizations agree") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 128);
    const SpectralField eta0 = cosine(g, 1, 0.01) + cosine(g, 2, 0.004);
    const double T = 0.5;
    const int K = 32;
    const SolutionPath picard = solve_global_picard(eta0, one_phase(), T, K, strip);
    const SolutionPath marched = march_path(eta0, one_phase(), T, K, strip);
    const double dt = T / K;
    CHECK(terminal_gap(picard, marched) <= std::max(1e-9, dt * dt * 1.0));
}

TEST_CASE("evolution commutes with translation") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 128);
    const double a = 2.0 * pi * 8.0 / 64.0;  // grid-aligned shift
    const SpectralField eta0 = cosine(g, 1, 0.02) + cosine(g, 3, 0.007, 0.4);

    const SolutionPath base = solve_global_picard(eta0, one_phase(), 0.5, 8, strip);
    const SolutionPath moved = solve_global_picard(shifted(eta0, a), one_phase(), 0.5, 8, strip);
    double worst = 0.0;
    for (std::size_t i = 0; i < base.etas.size(); ++i)
        worst = std::max(worst, (moved.etas[i] - shifted(base.etas[i], a)).max_abs());
    CHECK(worst <= 1e-12);
}

TEST_CASE("modes only decay in the small-data regime") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 96);
    const DyadicPartition p = make_partition(g);
    const SpectralField eta0 = cosine(g, 1, 5e-5) + cosine(g, 3, 2e-5);
    const double b1 = besov_norm(eta0, 1.0, p);
    REQUIRE(b1 <= 1e-4);

    const SolutionPath path = solve_global_picard(eta0, one_phase(), 1.0, 8, strip);
    const SpectralField& last = path.etas.back();
    for (std::size_t k = 0; k < eta0.size(); ++k) {
        const double before = std::abs(eta0.coeff(k));
        const double after = std::abs(last.coeff(k));
        if (before > 0.0)
            CHECK(after <= before * (1.0 + 10.0 * b1));
        else
            CHECK(after <= 10.0 * b1 * b1);  // modes born from the coupling
    }
}

TEST_CASE("two-phase path decays at the effective rate per mode") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 96);
    const double T = 0.25;
    const SpectralField eta0 = cosine(g, 1, 1e-5) + cosine(g, 2, 1e-5) + cosine(g, 5, 1e-5);
    const SolutionPath path = solve_global_picard(eta0, two_fluids(), T, 8, strip);
    const double kappa = two_fluids().kappa();
    for (int k : {1, 2, 5}) {
        const std::size_t idx = static_cast<std::size_t>(k);
        const double rate =
            -std::log(std::abs(path.etas.back().coeff(idx)) / std::abs(eta0.coeff(idx))) / T;
        CHECK(rate == doctest::Approx(kappa * k).epsilon(1e-2));
    }
}

TEST_CASE("adjacent-node jumps shrink with the step") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 96);
    const DyadicPartition p = make_partition(g);
    const SpectralField eta0 = cosine(g, 1, 0.02) + cosine(g, 2, 0.01);
    std::vector<double> jumps;
    for (int K : {8, 16}) {
        const SolutionPath path = solve_global_picard(eta0, one_phase(), 0.5, K, strip);
        double jump = 0.0;
        for (std::size_t i = 1; i < path.etas.size(); ++i)
            jump = std::max(jump, besov_norm(path.etas[i] - path.etas[i - 1], 1.0, p));
        jumps.push_back(jump);
    }
    CHECK(jumps[1] <= 0.65 * jumps[0]);
}

TEST_CASE("rescaled runs shadow each other") {
    // lambda = 2: half the period, half the depth, half the horizon, half the
    // data; mode-for-mode the coefficients must track 1:2.
    const TorusGrid ga(1, 64, 2.0 * pi);
    const StripGrid sa(ga, 28.0, 96);
    const TorusGrid gb(1, 64, pi);
    const StripGrid sb(gb, 14.0, 96);

    const SpectralField a0 = cosine(ga, 1, 0.02) + cosine(ga, 2, 0.01);
    const SpectralField b0 = cosine(gb, 1, 0.01) + cosine(gb, 2, 0.005);

    const SolutionPath pa = solve_global_picard(a0, one_phase(), 0.5, 8, sa);
    const SolutionPath pb = solve_global_picard(b0, one_phase(), 0.25, 8, sb);

    SpectralField half = pa.etas.back();
    half *= 0.5;
    double worst = 0.0;
    for (std::size_t k = 0; k < half.size(); ++k)
        worst = std::max(worst, std::abs(half.coeff(k) - pb.etas.back().coeff(k)));
    CHECK(worst <= 5e-10);
}

TEST_CASE("stability quotient") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 96);
    const SpectralField a = cosine(g, 1, 0.02) + cosine(g, 2, 0.01);

    const StabilityResult same = stability_probe(a, a, 0.5, 8, one_phase(), strip);
    CHECK(same.identical_inputs);
    CHECK(same.ratio == 0.0);

    const SpectralField b = a + cosine(g, 5, 1e-6);
    const StabilityResult probe = stability_probe(a, b, 0.5, 8, one_phase(), strip);
    CHECK_FALSE(probe.identical_inputs);
    CHECK(probe.ratio > 0.0);
    CHECK(probe.ratio < 50.0);
}

TEST_CASE("norm report invariant along a run") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 96);
    const SpectralField eta0 = cosine(g, 1, 0.01);
    const SolutionPath path = solve_global_picard(eta0, one_phase(), 1.0, 8, strip);
    const NormReport& r = path.report;
    REQUIRE(r.times.size() == path.times.size());
    for (std::size_t i = 0; i < r.times.size(); ++i)
        CHECK(r.x1_kappa[i] ==
              doctest::Approx(r.cl_infty_1[i] + r.kappa * r.cl_1_2[i]).epsilon(1e-14));
    // near-linear regime: the instantaneous norm only decays
    for (std::size_t i = 1; i < r.times.size(); ++i)
        CHECK(r.besov_1[i] <= r.besov_1[i - 1] + 1e-9);
}

TEST_CASE("guards") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 96);
    const SpectralField ok = cosine(g, 1, 0.01);

    CHECK_THROWS_AS(solve_global_picard(cosine(g, 1, 0.2), one_phase(), 1.0, 8, strip),
                    DataTooLarge);
    try {
        solve_global_picard(cosine(g, 1, 0.2), one_phase(), 1.0, 8, strip);
    } catch (const DataTooLarge& e) {
        CHECK(e.measured ==
              doctest::Approx(besov_norm(cosine(g, 1, 0.2), 1.0, make_partition(g))));
        CHECK(e.threshold == doctest::Approx(0.05));
    }

    CHECK_THROWS_AS(solve_global_picard(ok, one_phase(), -1.0, 8, strip), NegativeTime);
    CHECK_THROWS_AS(solve_global_picard(ok, one_phase(), 1.0, 0, strip), ConfigError);
    CHECK_THROWS_AS(step_march(ok, 0.0, one_phase(), strip), NegativeTime);
    EvolutionSettings bad;
    bad.delta = -1.0;
    CHECK_THROWS_AS(march_path(ok, one_phase(), 1.0, 4, strip, bad), ConfigError);

    // oversize interior node is reported with its index
    SolutionPath path;
    path.times = {0.0, 0.5};
    path.etas = {SpectralField(g), cosine(g, 1, 0.5)};
    path.params = one_phase();
    try {
        duhamel_map(path, ok, strip);
        CHECK(false);
    } catch (const SmallnessViolated& e) {
        CHECK(std::string(e.what()).find("node 1") != std::string::npos);
    }
}
