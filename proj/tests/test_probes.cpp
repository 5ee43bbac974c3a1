#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "muskat/besov.hpp"
#include "muskat/errors.hpp"
#include "muskat/fd_oracle.hpp"
#include "muskat/field.hpp"
#include "muskat/grid.hpp"
#include "muskat/numerics.hpp"
#include "muskat/params.hpp"

using namespace muskat;

namespace {

constexpr double pi = 3.14159265358979323846;

SpectralField cosine(const TorusGrid& g, int k, double a) {
    return SpectralField::from_modes(g, {Mode{{k, 0}, a, 0.0}});
}

SpectralField mixed(const TorusGrid& g) {
    return SpectralField::from_modes(g, {Mode{{1, 0}, 1.0, 0.0}, Mode{{2, 0}, 0.5, 0.3}});
}

PhysicalParams one_phase() {
    PhysicalParams p;
    p.kind = ProblemKind::OnePhase;
    p.mu_minus = 1.0;
    p.rho_minus = 1.0;
    return p;
}

PhysicalParams mixed_fluids() {
    PhysicalParams p;
    p.kind = ProblemKind::TwoPhase;
    p.mu_minus = 2.0;
    p.mu_plus = 0.5;
    p.rho_minus = 3.0;
    p.rho_plus = 1.0;
    return p;
}

}  // namespace

TEST_CASE("remainder probe sees a unit slope when the interface mode is higher") {
    const TorusGrid g(1, 256, 2.0 * pi);
    ProbeContext ctx{StripGrid(g, 28.0, 128)};
    const SpectralField eta = cosine(g, 3, 1.0);
    const SpectralField f = cosine(g, 1, 1.0);
    const std::vector<double> eps = {1e-2, 3e-3, 1e-3, 3e-4, 1e-4};

    const ProbeResult r = epsilon_scaling_probe("R_minus_linearity", eps, eta, f, ctx);
    CHECK(r.slope >= 0.9);
    CHECK(r.slope <= 1.1);
    CHECK(r.r2 >= 0.99);

    // leading response is -2 eps cos(2x); read the fitted line inside the
    // window, where curvature from the next order cannot leak in
    const double expected = 2e-3 * besov_norm(cosine(g, 2, 1.0), 1.0, make_partition(g));
    const double fitted = std::exp(r.intercept + r.slope * std::log(1e-3));
    CHECK(fitted == doctest::Approx(expected).epsilon(0.05));
}

TEST_CASE("remainder probe flips to quadratic when the interface mode is lower") {
    const TorusGrid g(1, 256, 2.0 * pi);
    ProbeContext ctx{StripGrid(g, 28.0, 128)};
    const SpectralField eta = cosine(g, 1, 1.0);
    const SpectralField f = cosine(g, 2, 1.0);
    const std::vector<double> eps = {1e-2, 3e-3, 1e-3, 3e-4};

    const ProbeResult r = epsilon_scaling_probe("R_minus_linearity", eps, eta, f, ctx);
    CHECK(r.slope >= 1.8);
    CHECK(r.slope <= 2.2);
}

TEST_CASE("mild deviation from the decayed data is quadratic in the data size") {
    const TorusGrid g(1, 64, 2.0 * pi);
    ProbeContext ctx{StripGrid(g, 28.0, 96)};
    ctx.params = one_phase();
    ctx.horizon = 0.25;
    ctx.time_nodes = 16;
    const std::vector<double> eps = {3e-2, 1e-2, 3e-3, 1e-3};

    const ProbeResult r =
        epsilon_scaling_probe("mild_deviation", eps, mixed(g), SpectralField(g), ctx);
    CHECK(r.slope >= 1.9);
    CHECK(r.slope <= 2.1);
    CHECK(r.r2 >= 0.99);
}

TEST_CASE("pressure trace correction beyond kappa mu eta is quadratic") {
    const TorusGrid g(1, 64, 2.0 * pi);
    ProbeContext ctx{StripGrid(g, 28.0, 96)};
    ctx.params = mixed_fluids();
    const std::vector<double> eps = {1e-2, 3e-3, 1e-3, 3e-4};

    const ProbeResult r =
        epsilon_scaling_probe("f_minus_correction", eps, mixed(g), SpectralField(g), ctx);
    CHECK(r.slope >= 1.9);
    CHECK(r.slope <= 2.1);
    CHECK(r.r2 >= 0.99);
}

TEST_CASE("probe guards") {
    const TorusGrid g(1, 64, 2.0 * pi);
    ProbeContext ctx{StripGrid(g, 28.0, 96)};
    const SpectralField eta = cosine(g, 3, 1.0);
    const SpectralField f = cosine(g, 1, 1.0);

    CHECK_THROWS_AS(epsilon_scaling_probe("R_minus_linearity", {1e-2, 1e-3, 1e-4}, eta, f, ctx),
                    ConfigError);
    CHECK_THROWS_AS(
        epsilon_scaling_probe("R_minus_linearity", {1e-2, 1e-3, 1e-4, 0.0}, eta, f, ctx),
        ConfigError);
    CHECK_THROWS_AS(
        epsilon_scaling_probe("vorticity", {1e-2, 3e-3, 1e-3, 3e-4}, eta, f, ctx), ConfigError);

    // two-phase probe with one-phase constants is rejected by the pressure solve
    ctx.params = one_phase();
    CHECK_THROWS_AS(
        epsilon_scaling_probe("f_minus_correction", {1e-2, 3e-3, 1e-3, 3e-4}, eta, f, ctx),
        ConfigError);

    // constants ride through the operator, so the fitted quantity vanishes
    const SpectralField zero(g);
    CHECK_THROWS_AS(
        epsilon_scaling_probe("R_minus_linearity", {1e-2, 3e-3, 1e-3, 3e-4}, eta, zero, ctx),
        DegeneratePath);
}

TEST_CASE("goodness of fit rejects data that bends away from a power law") {
    // the detection arithmetic itself: a clean law passes, a floored one fails
    std::vector<double> x = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
    std::vector<double> clean, floored;
    for (double v : x) {
        clean.push_back(2.0 * v * v);
        floored.push_back(2.0 * v * v + 1e-6);
    }
    CHECK(power_fit(x, clean).r2 >= 0.9999);
    CHECK(power_fit(x, floored).r2 < 0.99);
}

TEST_CASE("assembled interior stencil is symmetric to roundoff") {
    const TorusGrid g(1, 64, 2.0 * pi);
    const SpectralField eta =
        SpectralField::from_modes(g, {Mode{{1, 0}, 0.05, 0.0}, Mode{{3, 0}, 0.02, 1.1}});
    CHECK(fd_symmetry_defect(eta, 64, 64, 3.0) <= 1e-13);
    CHECK(fd_symmetry_defect(eta, 48, 96, 2.0, 7) <= 1e-13);
    CHECK(fd_symmetry_defect(SpectralField(g), 64, 64, 3.0) <= 1e-13);
}
