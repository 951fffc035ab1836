"""Model constructors and the model-spec mini-language."""

import numpy as np
import pytest

import curvop
from curvop import (
    DimensionMismatch,
    ParseError,
    build_model,
    complex_space_form,
    constant_curvature,
    cp2_explicit,
    flat,
    interpolate,
    parse_model,
    random_curvature,
    ricci,
    second_kind_spectrum,
    sectional,
    shift,
)
from curvop.models import ModelSpec, product


def test_constant_curvature_sectional_is_kappa():
    for kappa in (1.0, -2.5, 0.25):
        t = constant_curvature(5, kappa)
        rng = np.random.default_rng(11)
        for _ in range(4):
            f = curvop.random_frame(5, 2, rng)
            assert sectional(t, f[:, 0], f[:, 1]) == pytest.approx(kappa, abs=1e-12)


def test_unit_sphere_second_kind_is_identity():
    spec = second_kind_spectrum(constant_curvature(5, 1.0))
    assert np.abs(spec.eigenvalues - 1.0).max() < 1e-15


def test_flat_is_zero():
    assert flat(6).max_abs() == 0.0


def test_product_sphere_flat_spectrum():
    t = product(constant_curvature(3, 1.0), flat(1))
    assert t.dim == 4
    eigs = second_kind_spectrum(t).eigenvalues
    expected = np.array([-0.5, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0])
    assert np.abs(eigs - expected).max() < 1e-12


def test_product_block_structure():
    t = product(constant_curvature(3, 1.0), constant_curvature(2, 4.0))
    # mixed components vanish, pure blocks carry their own curvature
    assert t.component(1, 4, 1, 4) == 0.0
    assert t.component(1, 2, 1, 2) == pytest.approx(1.0)
    assert t.component(4, 5, 4, 5) == pytest.approx(4.0)


def test_cp2_fixture_components_and_einstein():
    t = cp2_explicit()
    assert t.component(1, 2, 1, 2) == pytest.approx(4.0)
    assert t.component(1, 3, 1, 3) == pytest.approx(1.0)
    assert t.component(1, 2, 3, 4) == pytest.approx(2.0)
    assert t.component(1, 3, 4, 2) == pytest.approx(-1.0)
    assert t.component(1, 4, 2, 3) == pytest.approx(-1.0)
    assert np.abs(ricci(t) - 6.0 * np.eye(4)).max() < 1e-12
    assert t.bianchi_residual() < 1e-14


def test_cp2_equals_complex_space_form_m2_c4():
    assert np.array_equal(cp2_explicit().array, complex_space_form(2, 4.0).array)


@pytest.mark.parametrize("m", [2, 3])
def test_complex_space_form_second_kind_spectrum(m):
    t = complex_space_form(m, 4.0)
    eigs = second_kind_spectrum(t).eigenvalues
    low, high = m * m - 1, m * (m + 1)
    expected = np.concatenate([np.full(low, -2.0), np.full(high, 4.0)])
    assert eigs.shape == expected.shape
    assert np.abs(eigs - expected).max() < 1e-9


def test_complex_space_form_einstein_constant_scales_with_c():
    for m, c in ((2, 2.0), (3, 1.0)):
        t = complex_space_form(m, c)
        assert np.abs(ricci(t) - c * (m + 1) / 2.0 * np.eye(2 * m)).max() < 1e-12


def test_random_curvature_is_deterministic():
    a = random_curvature(5, seed=7)
    b = random_curvature(5, seed=7)
    assert np.array_equal(a.array, b.array)
    c = random_curvature(5, seed=8)
    assert not np.array_equal(a.array, c.array)
    # tuple seeds give independent streams
    d = random_curvature(5, seed=(7, 1))
    assert not np.array_equal(a.array, d.array)
    assert np.array_equal(d.array, random_curvature(5, seed=(7, 1)).array)


def test_random_curvature_scale_power_of_two_is_exact():
    base = random_curvature(4, seed=5, scale=1.0)
    doubled = random_curvature(4, seed=5, scale=2.0)
    assert np.array_equal(doubled.array, 2.0 * base.array)


def test_random_curvature_satisfies_symmetries():
    t = random_curvature(6, seed=99)
    a = t.array
    assert np.abs(a + np.swapaxes(a, 0, 1)).max() == 0.0
    assert np.abs(a - np.transpose(a, (2, 3, 0, 1))).max() == 0.0
    assert t.bianchi_residual() < 1e-13


def test_interpolate_endpoints_and_midpoint():
    t0, t1 = flat(4), constant_curvature(4, 2.0)
    assert np.array_equal(interpolate(t0, t1, 0.0).array, t0.array)
    assert np.array_equal(interpolate(t0, t1, 1.0).array, t1.array)
    mid = interpolate(t0, t1, 0.5)
    assert np.abs(mid.array - 0.5 * t1.array).max() < 1e-15


def test_interpolate_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        interpolate(flat(4), flat(5), 0.5)


def test_shift_adds_scaled_second():
    t = random_curvature(4, seed=12)
    s = constant_curvature(4, 1.0)
    out = shift(t, s, 0.75)
    assert np.abs(out.array - (t.array + 0.75 * s.array)).max() < 1e-15
    with pytest.raises(DimensionMismatch):
        shift(t, constant_curvature(5, 1.0), 1.0)


def test_parse_model_atoms():
    spec = parse_model("sphere:n=4,k=2.5")
    assert spec == ModelSpec("sphere", {"n": 4, "k": 2.5})
    assert parse_model("cp2") == ModelSpec("cp2")
    assert parse_model(" flat:n=3 ").params == {"n": 3}
    spec = parse_model("random:n=5,seed=3,scale=1.5")
    assert spec.params == {"n": 5, "seed": 3, "scale": 1.5}


def test_parse_model_combiners():
    spec = parse_model("product:(sphere:n=3,k=1)x(flat:n=1)")
    assert spec.kind == "product"
    assert [c.kind for c in spec.children] == ["sphere", "flat"]
    spec = parse_model("interp:(flat:n=4)x(cp2),t=0.25")
    assert spec.kind == "interp" and spec.params == {"t": 0.25}
    # describe() round-trips through the parser
    assert parse_model(spec.describe()) == spec


@pytest.mark.parametrize(
    "bad",
    [
        "",
        "torus:n=4",
        "sphere:n=4,n=5",
        "sphere:radius=1",
        "sphere:n=abc",
        "product:(sphere:n=3,k=1)",
        "product:(flat:n=1",
        "interp:(flat:n=4)x(cp2),t=0.25,junk",
    ],
)
def test_parse_model_rejects_bad_specs(bad):
    with pytest.raises(ParseError):
        parse_model(bad)


def test_build_model_matches_direct_constructors():
    assert np.array_equal(build_model("sphere:n=4,k=2").array, constant_curvature(4, 2.0).array)
    assert np.array_equal(build_model("cp2").array, cp2_explicit().array)
    assert np.array_equal(
        build_model("product:(sphere:n=3,k=1)x(flat:n=1)").array,
        product(constant_curvature(3, 1.0), flat(1)).array,
    )
    assert np.array_equal(
        build_model("interp:(flat:n=4)x(cp2),t=0.5").array,
        interpolate(flat(4), cp2_explicit(), 0.5).array,
    )
    assert np.array_equal(
        build_model("random:n=5,seed=3").array, random_curvature(5, seed=3).array
    )


def test_build_model_requires_mandatory_params():
    for text in ("sphere", "flat", "csf", "random", "interp:(flat:n=4)x(cp2)"):
        with pytest.raises(ParseError):
            build_model(text)
