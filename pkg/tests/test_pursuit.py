import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from oracles import greedy_oracle, random_instance
from wavedict.pursuit import oomp


def test_identity_dictionary():
    res = oomp([3.0, 0.0, 4.0], np.eye(3), 0.0, 0)
    assert list(res.indices) == [0, 2]
    np.testing.assert_allclose(res.coeffs, [3.0, 4.0])
    np.testing.assert_allclose(res.approx, [3.0, 0.0, 4.0])
    assert res.residual_norm == 0.0


def test_single_atom_signal():
    rng = np.random.default_rng(5)
    D = rng.standard_normal((8, 12))
    D /= np.linalg.norm(D, axis=0)
    f = 2.5 * D[:, 4]
    res = oomp(f, D, 1e-12 * np.linalg.norm(f), 4)
    assert list(res.indices) == [4]
    np.testing.assert_allclose(res.coeffs, [f @ D[:, 4]])
    np.testing.assert_allclose(res.approx, f, atol=1e-14)


def test_fixed_8x12_matches_oracle():
    rng = np.random.default_rng(12)
    D = rng.standard_normal((8, 12))
    D /= np.linalg.norm(D, axis=0)
    f = rng.standard_normal(8)
    res = oomp(f, D, 0.0, 0)
    S, c = greedy_oracle(f, D, 0.0, 0)
    assert list(res.indices) == S
    np.testing.assert_allclose(res.coeffs, c, rtol=0, atol=1e-8)


def test_zero_signal():
    res = oomp(np.zeros(5), np.eye(5), 0.0, 0)
    assert len(res.indices) == 0 and not np.any(res.approx)


@pytest.mark.parametrize("kwargs, match", [
    (dict(tol=-1.0, l1=0), "nonnegative"),
    (dict(tol=0.0, l1=7), "out of range"),
    (dict(tol=0.0, l1=-1), "out of range"),
])
def test_argument_errors(kwargs, match):
    with pytest.raises(ValueError, match=match):
        oomp(np.ones(3), np.eye(3), **kwargs)


def test_dimension_mismatch():
    with pytest.raises(ValueError, match="dimension"):
        oomp(np.ones(4), np.eye(3), 0.0, 0)


def test_duplicate_atoms_never_both_selected():
    rng = np.random.default_rng(3)
    D = rng.standard_normal((6, 5))
    D /= np.linalg.norm(D, axis=0)
    D = np.hstack([D, D])
    res = oomp(rng.standard_normal(6), D, 0.0, 0)
    picked = set(int(i) % 5 for i in res.indices)
    assert len(picked) == len(res.indices)


def test_exhausted_flag_when_span_is_used_up():
    D = np.eye(4)[:, :2]
    res = oomp(np.ones(4), D, 0.0, 0)
    assert res.exhausted and list(res.indices) == [0, 1]
    assert res.residual_norm == pytest.approx(np.sqrt(2))


def test_max_atoms():
    rng = np.random.default_rng(0)
    f, D = random_instance(rng)
    res = oomp(f, D, 0.0, 0, max_atoms=2)
    assert len(res.indices) == 2 and res.exhausted


@pytest.mark.parametrize("seed", range(25))
def test_oracle_equivalence(seed):
    rng = np.random.default_rng(1000 + seed)
    f, D = random_instance(rng)
    tol = 0.0 if seed % 2 else 0.3 * np.linalg.norm(f)
    l1 = int(rng.integers(D.shape[1]))
    res = oomp(f, D, tol, l1)
    S, c = greedy_oracle(f, D, tol, l1)
    assert list(res.indices) == S
    np.testing.assert_allclose(res.coeffs, c, rtol=0, atol=1e-8)


def instances():
    return st.integers(2, 10).flatmap(lambda n: st.tuples(
        arrays(np.float64, n, elements=st.floats(-10, 10, allow_subnormal=False)),
        arrays(np.float64, (n, n + 6), elements=st.floats(-1, 1, allow_subnormal=False)),
        st.floats(0.0, 0.9),
    ))


def _prepare(f, D):
    norms = np.linalg.norm(D, axis=0)
    if np.linalg.norm(f) < 1e-3 or norms.min() < 1e-2 or np.linalg.matrix_rank(D) < D.shape[0]:
        return None
    return f, D / norms


@settings(max_examples=150, deadline=None)
@given(instances())
def test_invariants(case):
    f, D, frac = case
    prepared = _prepare(f, D)
    if prepared is None:
        return
    f, D = prepared
    fnorm = np.linalg.norm(f)
    tol = frac * fnorm
    res = oomp(f, D, tol, 0, record=True)
    r = f - res.approx
    sel = D[:, res.indices]
    # residual orthogonal to every selected atom
    assert np.abs(sel.T @ r).max() <= 1e-8 * fnorm
    # distinct atoms
    assert len(set(res.indices.tolist())) == len(res.indices)
    # approx is the stated combination
    np.testing.assert_allclose(res.approx, sel @ res.coeffs, rtol=0, atol=1e-12 * fnorm)
    # residual never grows
    hist = np.array(res.residual_history)
    assert np.all(np.diff(hist) <= 1e-12 * fnorm)
    # least-squares optimality over the selected set
    c_ls = np.linalg.lstsq(sel, f, rcond=None)[0]
    assert np.linalg.norm(r) <= np.linalg.norm(f - sel @ c_ls) + 1e-8 * fnorm
    # full-rank dictionary: tolerance is met
    assert np.linalg.norm(r) <= tol + 1e-10 * fnorm
