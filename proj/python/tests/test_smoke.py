import math
import os

import pytest

import muskat


def grid(n=64):
    return muskat.TorusGrid(1, n, 2 * math.pi)


def single_mode(g, k, amplitude, phase=0.0):
    return muskat.SpectralField.from_modes(g, [(k, amplitude, phase)])


def test_besov_norm_of_a_single_mode_is_its_amplitude():
    u = single_mode(grid(), 1, 0.1)
    assert abs(muskat.besov_norm(muskat.modulus(u), 0.0) - 0.1) < 1e-15


def test_flat_interface_operator_reduces_to_the_half_laplacian():
    g = grid()
    strip = muskat.StripGrid(g, 28.0, 96)
    f = single_mode(g, 2, 1.0)
    op = muskat.DnOperator(strip, muskat.SpectralField(g))
    assert op.remainder(f).max_abs() <= 1e-12
    assert (op.apply(f) - muskat.modulus(f)).max_abs() <= 1e-12


def test_first_order_response_matches_the_closed_form():
    # interface mode p = 3 above data mode q = 1: the first-order remainder
    # is -a q (p - q) cos((p - q) x), everything else is O(a^2). The strip
    # needs enough layers that the z quadrature bias sits below that.
    g = grid()
    strip = muskat.StripGrid(g, 28.0, 512)
    a = 1e-4
    eta = single_mode(g, 3, a)
    f = single_mode(g, 1, 1.0)
    expected = single_mode(g, 2, -2.0 * a)
    got = muskat.DnOperator(strip, eta).remainder(f)
    assert (got - expected).max_abs() <= 1e-6


def test_oversized_interface_is_rejected():
    g = grid()
    strip = muskat.StripGrid(g, 28.0, 96)
    big = single_mode(g, 1, 0.2)  # |D|eta in B0 is 0.2, ceiling is 0.1
    with pytest.raises(muskat.SmallnessViolated):
        muskat.DnOperator(strip, big).remainder(single_mode(g, 1, 1.0))


def test_finite_difference_oracle_agrees():
    g = grid()
    strip = muskat.StripGrid(g, 28.0, 256)
    eta = single_mode(g, 2, 0.01)
    f = single_mode(g, 1, 1.0)
    spectral = muskat.DnOperator(strip, eta).apply(f)
    fd = muskat.fd_dn(eta, f, 256, 256, 3.0)
    assert (spectral - fd).max_abs() / spectral.max_abs() <= 5e-3


def test_evolution_decays_and_tracks_the_linear_rate():
    g = grid()
    strip = muskat.StripGrid(g, 28.0, 96)
    eta0 = single_mode(g, 1, 1e-3)
    path = muskat.solve_global_picard(eta0, muskat.PhysicalParams(), 0.5, 16, strip)
    b1 = path.report.besov_1
    assert all(b <= a + 1e-9 for a, b in zip(b1, b1[1:]))
    assert path.residual <= 1e-10
    assert b1[-1] == pytest.approx(b1[0] * math.exp(-0.5), rel=1e-2)


def test_two_phase_trace_jump_identity():
    g = grid()
    strip = muskat.StripGrid(g, 28.0, 96)
    params = muskat.PhysicalParams(muskat.ProblemKind.two_phase, 1.0, 2.0, 1.0, 0.0)
    eta = single_mode(g, 1, 0.01)
    state = muskat.solve_two_phase(eta, params, strip)
    defect = (state.f_plus - state.f_minus + params.density_jump * eta).max_abs()
    assert defect <= 1e-12
    assert state.kappa_eff == pytest.approx(params.kappa)


def test_probe_measures_the_unit_slope():
    g = grid()
    strip = muskat.StripGrid(g, 28.0, 128)
    r = muskat.epsilon_scaling_probe(
        "R_minus_linearity",
        [1e-2, 3e-3, 1e-3, 3e-4],
        single_mode(g, 3, 1.0),
        single_mode(g, 1, 1.0),
        strip,
    )
    assert 0.9 <= r.slope <= 1.1
    assert r.r2 >= 0.99


def test_probe_rejects_bad_requests():
    g = grid()
    strip = muskat.StripGrid(g, 28.0, 96)
    eta = single_mode(g, 3, 1.0)
    f = single_mode(g, 1, 1.0)
    with pytest.raises(muskat.ConfigError):
        muskat.epsilon_scaling_probe("R_minus_linearity", [1e-2, 1e-3], eta, f, strip)
    with pytest.raises(muskat.ConfigError):
        muskat.epsilon_scaling_probe("vorticity", [1e-2, 3e-3, 1e-3, 3e-4], eta, f, strip)


def test_acceptance_criterion_one_passes():
    r = muskat.run_criterion(1)
    assert r.id == 1
    assert r.passed
    assert dict(r.measured)["max_completeness_defect"] <= 1e-12


def test_config_parsing():
    with pytest.raises(muskat.ConfigError):
        muskat.parse_run_config('{"problem": "one_phase", "N": 63}')

    config_dir = os.environ.get("MUSKAT_CONFIG_DIR")
    if config_dir is None:
        pytest.skip("MUSKAT_CONFIG_DIR not set")
    cfg = muskat.load_run_config(os.path.join(config_dir, "verify.json"))
    assert cfg.N == 128
    assert cfg.K == 64
    assert cfg.dt == pytest.approx(cfg.T / cfg.K)
    eta0 = muskat.build_eta0(cfg)
    assert muskat.besov_norm(eta0, 1.0) <= cfg.tolerances.delta
    assert "\"seed\"" in muskat.config_json(cfg)


def test_random_fields_are_seed_deterministic():
    g = grid()
    a = muskat.random_trig_poly(muskat.Rng(9), g, 6, 8, 1.0)
    b = muskat.random_trig_poly(muskat.Rng(9), g, 6, 8, 1.0)
    assert (a - b).max_abs() == 0.0
    assert a.mean_zero()
