import math
from fractions import Fraction

import numpy as np
import pytest

from haarpy.haar import moment
from haarpy.models import MomentQuery
from haarpy.monte_carlo import haar_batch, haar_sample, mc_moment


def query(i, j, k, l, n):
    return MomentQuery(i=i, j=j, k=k, l=l, n=n)


@pytest.mark.parametrize("n", range(1, 9))
def test_haar_sample_is_unitary(n):
    rng = np.random.default_rng(n)
    u = haar_sample(n, rng)
    assert u.shape == (n, n)
    assert np.max(np.abs(u @ u.conj().T - np.eye(n))) < 1e-12
    assert np.allclose(np.linalg.norm(u, axis=0), 1.0, atol=1e-12)


def test_haar_sample_phase():
    u = haar_sample(1, np.random.default_rng(0))
    assert abs(abs(u[0, 0]) - 1.0) < 1e-12


def test_haar_batch():
    batch = haar_batch(3, 16, np.random.default_rng(1))
    assert batch.shape == (16, 3, 3)
    products = batch @ np.conj(np.transpose(batch, (0, 2, 1)))
    assert np.allclose(products, np.eye(3), atol=1e-12)
    with pytest.raises(ValueError):
        haar_batch(0, 1, np.random.default_rng(1))


def test_reproducible():
    q = query((1,), (1,), (1,), (1,), 2)
    first = mc_moment(q, samples=2000, seed=5, streams=4, workers=1)
    second = mc_moment(q, samples=2000, seed=5, streams=4, workers=3)
    assert first == second
    assert mc_moment(q, samples=2000, seed=6, streams=4) != first


@pytest.mark.parametrize(
    "i,j,k,l,n",
    [
        ((1,), (1,), (1,), (1,), 2),
        ((1, 1), (1, 1), (1, 1), (1, 1), 2),
        ((1, 1), (1, 1), (1, 1), (1, 1), 1),
        ((1, 2), (1, 2), (1, 2), (2, 1), 3),
        ((1, 2, 1), (1, 2, 2), (2, 1, 1), (2, 1, 2), 2),
    ],
)
def test_estimates_agree_with_exact(i, j, k, l, n):
    q = query(i, j, k, l, n)
    estimate = mc_moment(q, samples=100000, seed=20100)
    exact = moment(q)
    assert estimate.agrees_with(exact)
    assert abs(estimate.mean_im) <= max(5 * estimate.stderr, 1e-9)


@pytest.mark.parametrize("d,n", [(d, n) for d in (1, 2, 3) for n in (1, 2, 3, 4)])
def test_sweep_agrees_with_exact(d, n):
    rng = np.random.default_rng(100 * d + n)
    for _ in range(3):
        i = tuple(int(v) for v in rng.integers(1, n + 1, size=d))
        j = tuple(int(v) for v in rng.integers(1, n + 1, size=d))
        k = tuple(i[a] for a in rng.permutation(d))
        l = tuple(j[a] for a in rng.permutation(d))
        q = query(i, j, k, l, n)
        estimate = mc_moment(q, samples=20000, seed=int(rng.integers(0, 2**31)))
        assert estimate.agrees_with(moment(q))


def test_phase_case_below_degree():
    estimate = mc_moment(query((1, 1), (1, 1), (1, 1), (1, 1), 1), samples=1000, seed=3)
    assert abs(estimate.mean_re - 1.0) < 1e-9
    assert estimate.stderr < 1e-6


def test_single_sample():
    estimate = mc_moment(query((1,), (1,), (1,), (1,), 2), samples=1, seed=1)
    assert estimate.samples == 1
    assert math.isinf(estimate.stderr)
    assert estimate.agrees_with(Fraction(1, 2))


def test_invalid_arguments():
    with pytest.raises(ValueError):
        mc_moment(MomentQuery(i=(1,), j=(1,), k=(1,), l=(1,)), samples=10)
    with pytest.raises(ValueError):
        mc_moment(query((1,), (1,), (1,), (1,), 2), samples=0)
