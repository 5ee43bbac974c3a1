#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "muskat/besov.hpp"
#include "muskat/dn.hpp"
#include "muskat/errors.hpp"
#include "muskat/field.hpp"
#include "muskat/grid.hpp"
#include "muskat/multipliers.hpp"
#include "muskat/params.hpp"
#include "muskat/random_fields.hpp"
#include "muskat/two_phase.hpp"

using namespace muskat;

namespace {

constexpr double pi = std::numbers::pi;

SpectralField cosine(const TorusGrid& g, int k, double a, double phase = 0.0) {
    return SpectralField::from_modes(g, {Mode{{k, 0}, a, phase}});
}

PhysicalParams symmetric_fluids() {
    PhysicalParams p;
    p.kind = ProblemKind::TwoPhase;
    p.mu_minus = 1.0;
    p.mu_plus = 1.0;
    p.rho_minus = 2.0;
    p.rho_plus = 0.0;
    return p;
}

SpectralField rescaled_b1(const SpectralField& u, double target, const DyadicPartition& p) {
    SpectralField out = u;
    out *= target / besov_norm(u, 1.0, p);
    return out;
}

}  // namespace

TEST_CASE("flat interface carries zero traces") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 96);
    const TwoPhaseState st = solve_two_phase(SpectralField(g), symmetric_fluids(), strip);
    CHECK(st.f_minus.max_abs() == 0.0);
    CHECK(st.f_plus.max_abs() == 0.0);
    CHECK(st.kappa_eff == doctest::Approx(1.0));
    CHECK(two_phase_rhs(SpectralField(g), symmetric_fluids(), strip).max_abs() == 0.0);
}

TEST_CASE("pressure jump identity holds to solver precision") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 128);
    const SpectralField eta = cosine(g, 1, 0.02) + cosine(g, 3, 0.01);
    const PhysicalParams params = symmetric_fluids();
    const TwoPhaseState st = solve_two_phase(eta, params, strip);
    SpectralField jump = st.eta;
    jump *= -params.density_jump();
    CHECK((st.f_plus - st.f_minus - jump).max_abs() <= 1e-10);
    CHECK(st.f_minus.mean() == std::complex<double>(0.0, 0.0));
    CHECK(st.f_plus.mean() == std::complex<double>(0.0, 0.0));
}

TEST_CASE("normal flux is continuous across the interface") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 192);
    const SpectralField eta = cosine(g, 1, 0.03) + cosine(g, 2, -0.015);
    const PhysicalParams params = symmetric_fluids();
    const TwoPhaseState st = solve_two_phase(eta, params, strip);

    SpectralField up = dn_apply(st.eta, st.f_plus, Side::plus, strip);
    up *= 1.0 / params.mu_plus;
    SpectralField down = dn_apply(st.eta, st.f_minus, Side::minus, strip);
    down *= 1.0 / params.mu_minus;
    CHECK((up - down).max_abs() <= 1e-8);
}

TEST_CASE("lower trace is the scaled interface at leading order") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 192);
    PhysicalParams params;
    params.kind = ProblemKind::TwoPhase;
    params.mu_minus = 2.0;
    params.mu_plus = 0.5;
    params.rho_minus = 3.0;
    params.rho_plus = 1.0;  // kappa = 0.8

    for (double a : {1e-2, 1e-3}) {
        const SpectralField eta = cosine(g, 1, a) + cosine(g, 2, 0.5 * a);
        const SpectralField f = solve_f_minus(eta, params, strip);
        SpectralField lead = eta;
        lead *= params.kappa() * params.mu_minus;
        CHECK((f - lead).max_abs() <= 20.0 * a * a);
    }
}

TEST_CASE("vanishing upper viscosity reduces to the one-phase traces") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 192);
    const DyadicPartition p = make_partition(g);
    PhysicalParams params;
    params.kind = ProblemKind::TwoPhase;
    params.mu_minus = 1.0;
    params.mu_plus = 1e-8;
    params.rho_minus = 1.0;
    params.rho_plus = 0.0;

    const SpectralField eta =
        rescaled_b1(cosine(g, 1, 1.0) + cosine(g, 2, 0.4), 1e-3, p);
    const SpectralField f = solve_f_minus(eta, params, strip);
    SpectralField lead = eta;
    lead *= params.rho_minus;
    CHECK((f - lead).max_abs() / lead.max_abs() <= 1e-2);

    // the interface velocity agrees with the vacuum-above formula
    PhysicalParams one;
    one.kind = ProblemKind::OnePhase;
    one.mu_minus = 1.0;
    one.rho_minus = 1.0;
    const SpectralField rhs_two = two_phase_rhs(eta, params, strip);
    const SpectralField rhs_one = one_phase_rhs(eta, one, strip);
    CHECK((rhs_two - rhs_one).max_abs() <= 1e-6);
}

TEST_CASE("doubling the density jump doubles the lower trace") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 192);
    const DyadicPartition p = make_partition(g);
    const SpectralField eta = cosine(g, 1, 0.01) + cosine(g, 3, 0.004);
    const double b1 = besov_norm(eta, 1.0, p);

    PhysicalParams pa = symmetric_fluids();
    pa.rho_minus = 1.5;
    pa.rho_plus = 0.5;  // jump 1
    PhysicalParams pb = symmetric_fluids();
    pb.rho_minus = 2.5;
    pb.rho_plus = 0.5;  // jump 2

    SpectralField doubled = solve_f_minus(eta, pa, strip);
    doubled *= 2.0;
    const SpectralField fb = solve_f_minus(eta, pb, strip);
    CHECK(besov_norm(fb - doubled, 1.0, p) <= 5.0 * b1 * b1);
}

TEST_CASE("interface velocity is mean-free") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 128);
    Rng rng(17);
    const DyadicPartition p = make_partition(g);
    for (int trial = 0; trial < 3; ++trial) {
        const SpectralField eta =
            rescaled_b1(random_trig_poly(rng, g, 3, 5, 1.0), 0.02, p);
        CHECK(two_phase_rhs(eta, symmetric_fluids(), strip).mean() ==
              std::complex<double>(0.0, 0.0));

        PhysicalParams one;
        one.kind = ProblemKind::OnePhase;
        CHECK(one_phase_rhs(eta, one, strip).mean() == std::complex<double>(0.0, 0.0));
    }
}

TEST_CASE("trace recovery arithmetic") {
    const TorusGrid g(1, 64, 2.0 * pi);
    PhysicalParams params = symmetric_fluids();

    const SpectralField f = cosine(g, 2, 0.3);
    CHECK((recover_f_plus(f, SpectralField(g), params) - f).max_abs() == 0.0);

    // one-phase limit: f^- = rho_- eta and rho_+ = 0 leave nothing above
    const SpectralField eta = cosine(g, 1, 0.05);
    SpectralField fm = eta;
    fm *= params.rho_minus;
    CHECK(recover_f_plus(fm, eta, params).max_abs() == 0.0);

    CHECK_THROWS_AS(recover_f_plus(f, cosine(TorusGrid(1, 32, 2.0 * pi), 1, 0.1), params),
                    GridMismatch);
}

TEST_CASE("trace difference is controlled by the interface difference") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 128);
    const DyadicPartition p = make_partition(g);
    const PhysicalParams params = symmetric_fluids();
    Rng rng(2718);
    const double r = 1.0;
    double worst = 0.0;
    for (int trial = 0; trial < 6; ++trial) {
        const SpectralField eta1 =
            rescaled_b1(random_trig_poly(rng, g, 3, 5, 1.0), 0.03, p);
        const SpectralField eta2 =
            rescaled_b1(random_trig_poly(rng, g, 3, 5, 1.0), 0.03, p);
        const SpectralField fd =
            solve_f_minus(eta1, params, strip) - solve_f_minus(eta2, params, strip);
        const SpectralField etad = eta1 - eta2;
        const double rhs =
            params.density_jump() *
            ((besov_norm(modulus(eta1), r, p) + besov_norm(modulus(eta2), r, p)) *
                 besov_norm(modulus(etad), 0.0, p) +
             besov_norm(modulus(etad), r, p));
        REQUIRE(rhs > 0.0);
        worst = std::max(worst, besov_norm(modulus(fd), r, p) / rhs);
    }
    CHECK(worst <= 20.0);
    CHECK(std::isfinite(worst));
}

TEST_CASE("parameter validation") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const StripGrid strip(g, 28.0, 96);
    const SpectralField eta = cosine(g, 1, 0.01);

    PhysicalParams one;
    one.kind = ProblemKind::OnePhase;
    CHECK_THROWS_AS(solve_f_minus(eta, one, strip), ConfigError);
    CHECK_THROWS_AS(one_phase_rhs(eta, symmetric_fluids(), strip), ConfigError);

    PhysicalParams unstable = symmetric_fluids();
    unstable.rho_minus = 0.0;
    unstable.rho_plus = 1.0;
    CHECK_THROWS_AS(solve_f_minus(eta, unstable, strip), ConfigError);

    TwoPhaseSettings bad;
    bad.tol = 0.0;
    CHECK_THROWS_AS(solve_f_minus(eta, symmetric_fluids(), strip, bad), ConfigError);

    CHECK_THROWS_AS(solve_f_minus(cosine(g, 1, 0.2), symmetric_fluids(), strip),
                    SmallnessViolated);
}
