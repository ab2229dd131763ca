import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import cardinal_bspline
from oracles import refinement_residual
from wavedict.cascade import (ConstructionError, integer_values, refinement_matrix,
                              wavelet_gen)
from wavedict.filters import (FAMILIES, SPLINE, VANISHING_MOMENTS, get_filters,
                              normalize_scaling_filter)

SPLINE_DEGREE = {"CW2": 1, "CDF53": 1, "Short2": 1, "CW3": 2, "Short3": 2, "CW4": 3, "Short4": 3}


def test_refinement_matrix_indexing():
    A = refinement_matrix([0.25, 0.75, 0.75, 0.25])
    np.testing.assert_array_equal(A, [[0.25, 0.0, 0.0], [0.75, 0.75, 0.25], [0.0, 0.25, 0.75]])


@pytest.mark.parametrize("h, expected", [
    ([1 / 2, 1, 1 / 2], [0, 1]),
    ([1 / 4, 3 / 4, 3 / 4, 1 / 4], [0, 1 / 2, 1 / 2]),
    ([1, 1], [1]),
])
def test_integer_values(h, expected):
    np.testing.assert_allclose(integer_values(h), expected, rtol=0, atol=1e-14)


def test_multiplicity_error():
    # A = [[1,0,0],[0,0,1],[0,1,0]] has eigenvalue 1 twice
    with pytest.raises(ConstructionError, match="multiplicity 1"):
        integer_values([1.0, 0.0, 0.0, 1.0])


def test_level_zero_rejected():
    with pytest.raises(ValueError):
        wavelet_gen([1 / 2, 1, 1 / 2], [-1 / 2, 1, -1 / 2], 0)


def test_hat_u1():
    gen = wavelet_gen([1 / 2, 1, 1 / 2], [-1 / 2, 1, -1 / 2], 1)
    np.testing.assert_allclose(gen.phi, [0, 0.5, 1, 0.5, 0], atol=1e-15)
    np.testing.assert_allclose(gen.psi, [0, -0.5, 1, -0.5, 0], atol=1e-15)


def test_hat_u2():
    gen = wavelet_gen([1 / 2, 1, 1 / 2], [-1 / 2, 1, -1 / 2], 2)
    np.testing.assert_allclose(gen.phi, [0, .25, .5, .75, 1, .75, .5, .25, 0], atol=1e-15)


@pytest.mark.parametrize("name", FAMILIES)
def test_lengths(name):
    pair = get_filters(name)
    gen = wavelet_gen(pair.h, pair.g, 1)
    assert len(gen.phi) == pair.K * 2 + 1
    assert len(gen.psi) == pair.M + pair.K + 1


@pytest.mark.parametrize("name", list(SPLINE_DEGREE))
@pytest.mark.parametrize("u", [1, 3, 6])
def test_spline_closed_form(name, u):
    pair = get_filters(name)
    gen = wavelet_gen(pair.h, pair.g, u)
    n = SPLINE_DEGREE[name]
    np.testing.assert_allclose(gen.phi, cardinal_bspline(gen.x_phi, n), rtol=0, atol=1e-12)
    # psi(x) = sum_k g(k) phi(2x + 1 - k), phi in closed form
    x = gen.x_psi
    expected = sum(pair.g[k] * cardinal_bspline(2 * x - k, n) for k in range(len(pair.g)))
    np.testing.assert_allclose(gen.psi, expected, rtol=0, atol=1e-12)


@pytest.mark.parametrize("name", FAMILIES)
def test_endpoints_vanish(name):
    pair = get_filters(name)
    gen = wavelet_gen(pair.h, pair.g, 4)
    assert abs(gen.phi[0]) <= 1e-12 and abs(gen.phi[-1]) <= 1e-12


@pytest.mark.parametrize("name", FAMILIES)
@pytest.mark.parametrize("u", [2, 5])
def test_refinement_residual(name, u):
    pair = get_filters(name)
    gen = wavelet_gen(pair.h, pair.g, u)
    h = normalize_scaling_filter(pair.h)
    assert refinement_residual(gen.phi, h, gen.phi, u) <= 1e-10
    assert refinement_residual(gen.psi, pair.g, gen.phi, u) <= 1e-10


@pytest.mark.parametrize("name", FAMILIES)
def test_downsampling_consistency(name):
    pair = get_filters(name)
    for u in range(2, 7):
        fine = wavelet_gen(pair.h, pair.g, u)
        coarse = wavelet_gen(pair.h, pair.g, u - 1)
        np.testing.assert_allclose(fine.phi[::2], coarse.phi, rtol=0, atol=1e-12)
        np.testing.assert_allclose(fine.psi[::2], coarse.psi, rtol=0, atol=1e-12)


@pytest.mark.parametrize("name", SPLINE)
def test_partition_of_unity(name):
    pair = get_filters(name)
    u = 5
    phi = wavelet_gen(pair.h, pair.g, u).phi
    K = pair.K
    # sum over integer shifts at x in [K-1, K] where K shifts overlap
    total = sum(phi[(K - 1 - k) * 2**u + np.arange(2**u + 1)] for k in range(K))
    np.testing.assert_allclose(total, 1.0, rtol=0, atol=1e-10)


@pytest.mark.parametrize("name", FAMILIES)
def test_wavelet_moments_by_quadrature(name):
    pair = get_filters(name)
    gen = wavelet_gen(pair.h, pair.g, 6)
    x = gen.x_psi
    for q in range(VANISHING_MOMENTS[name]):
        assert abs(np.trapezoid(gen.psi * x**q, x)) <= 1e-4


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(FAMILIES), st.integers(1, 6))
def test_phi_scale_is_sum_normalized(name, u):
    pair = get_filters(name)
    gen = wavelet_gen(pair.h, pair.g, u)
    # integer samples sum to one
    assert abs(gen.phi[::2**u].sum() - 1.0) <= 1e-10
