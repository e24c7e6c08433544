"""Smoke tests for the python bindings."""

import math

import pytest

import mirrorlab as ml

PI = math.pi


def fig_params():
    return ml.derive_params(1.5, 0.0, PI / 3, PI / 3, 3.0)


def test_derive_params_identity():
    p = ml.derive_params(4.0, 1.0, 1.0, 2.0, 3.0)
    assert p.k01 == 2.0
    assert p.k0() == 1.0
    assert p.front_face() == 1.5
    with pytest.raises(ValueError):
        ml.derive_params(-1.0, 0.0, 1.0, 1.0, 3.0)


def test_validity_warning():
    warned = ml.derive_params(1.5, 0.015, 1.0, 1.1, 3.0)
    assert ml.validity_warning(warned) is not None
    quiet = ml.derive_params(1.5, 0.005, 1.0, 1.1, 3.0)
    assert ml.validity_warning(quiet) is None


def test_noise_prefactor():
    p = fig_params()
    assert ml.noise_prefactor(p) == pytest.approx(1.0 / math.sqrt(4 * PI))


def test_closed_form_matches_integration():
    model = ml.EffectiveModel(fig_params(), ml.ReflectionSpec.user(-1.0 + 0j))
    series = ml.integrate_effective(model, 3.0 / 512, 9.0)
    assert series.occupation()[0] == 1.0
    t45 = series.at_time(4.5)
    assert abs(t45 - ml.closed_form(model, 4.5)) < 1e-8
    assert abs(t45) ** 2 == pytest.approx(0.05680, abs=1e-4)


def test_optics_chain():
    spec = ml.DielectricSpec(strength=0.2, detuning=10.0, k11=0.1)
    chi = ml.susceptibility(spec)
    assert chi.real == pytest.approx(2.0 / 100.01)
    assert chi.imag == pytest.approx(-0.02 / 100.01)
    n = ml.refraction_index(chi)
    assert ml.fresnel_reflection(n) < 0.0
    assert ml.weak_limit_reflection(spec) == pytest.approx(-0.01)


def test_feedback_identity():
    p = ml.derive_params(1.5, 0.02, 2.0, 2.5, 3.0)
    ident = ml.feedback_identity(p, 7.0, p.k0(), p.detuning())
    assert ident.ok
    assert ident.lhs == pytest.approx(ident.rhs)


def test_solve_alpha():
    grid = [0.2 * i for i in range(40)]
    assert ml.solve_alpha(1.0, grid) == pytest.approx(0.5, abs=1e-10)
    assert ml.anticommutator_value(1.0, 0.5, 3.0) == pytest.approx(1.0, abs=1e-14)


def test_network_round_trip():
    params = ml.derive_params(0.5, 0.05, 2.0, 27.0, 3.0)
    geom = ml.DielectricGeometry.uniform_slab(1.5, 3.0, 8)
    assert len(geom) == 8
    net = ml.MirrorNetwork(params, geom)
    series = ml.integrate_network(net, 0.01, 6.0)
    occ = series.occupation()
    assert occ[0] == 1.0
    assert all(o <= 1.0 + 1e-6 for o in occ)

    reduced = ml.integrate_reduced(net, 0.01, 6.0)
    metrics = ml.compare_series(series, reduced, ml.CompareQuantity.occupation)
    assert metrics.max_abs < 0.05


def test_continuum_sum_check():
    params = ml.derive_params(0.5, 0.05, 2 * PI, 2 * PI + 30.0, 3.0)
    depth = ml.commensurate_depth(params.k0(), 40.0)
    geom = ml.DielectricGeometry.uniform_slab(1.5, depth, int(50 * depth), 0.1)
    probe = ml.AmplitudeHistory(0.0, 0.5, 1.0 + 0j)
    t = 2 * (1.5 + depth) + 1.0
    n = int(round(t / 0.5))
    for _ in range(n + 1):
        probe.append(1.0 + 0j, 0j)
    check = ml.continuum_sum_check(geom, params, probe, t)
    assert check.rel_err < 0.05


def test_run_fig2(tmp_path):
    files = ml.run_fig2(str(tmp_path), 1)
    assert len(files) == 6
    for f in files:
        text = open(f).read().splitlines()
        assert text[0] == "t,re_amp,im_amp,occupation,re_ref,im_ref"
        first = text[1].split(",")
        assert float(first[0]) == 0.0
        assert float(first[3]) == 1.0


def test_validate_report():
    rep = ml.run_validate()
    assert rep.ok
    assert rep.alpha_star == pytest.approx(0.5, abs=1e-10)
    assert rep.factor2_ratio == pytest.approx(0.5, abs=1e-3)
