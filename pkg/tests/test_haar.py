import itertools
from fractions import Fraction

import numpy as np
import pytest

from haarpy.exceptions import CapacityError, DegreeMismatchError, IndexRangeError
from haarpy.haar import (
    corner_effective_length,
    expectation_coefficients,
    moment,
    moment_symbolic,
    one_row_moment,
    one_row_moment_counting,
    one_row_moment_via_units,
    row_norm,
    row_norm_identity,
    same_type,
)
from haarpy.models import MomentQuery
from haarpy.polynomials import PolynomialInN, RationalFunctionInN
from haarpy.tableaux import YoungDiagram
from haarpy.weingarten import wg_moment

from .dense import basis, project_elementary, unit_matrices


def query(i, j, k, l, n=None):
    return MomentQuery(i=i, j=j, k=k, l=l, n=n)


def product(d, n):
    value = Fraction(1)
    for a in range(d):
        value *= n + a
    return value


@pytest.mark.parametrize("n", range(1, 9))
def test_low_degree_moments(n):
    assert moment(query((1,), (1,), (1,), (1,), n)) == Fraction(1, n)
    assert moment(query((1, 1), (1, 1), (1, 1), (1, 1), n)) == Fraction(2, n * (n + 1))


@pytest.mark.parametrize("n", range(2, 7))
def test_transposition_moment(n):
    assert moment(query((1, 2), (1, 2), (1, 2), (2, 1), n)) == Fraction(-1, n * (n * n - 1))


def test_phase_moment():
    assert moment(query((1, 1), (1, 1), (1, 1), (1, 1), 1)) == 1
    assert moment(query((1, 1, 1), (1, 1, 1), (1, 1, 1), (1, 1, 1), 1)) == 1


def test_moment_needs_n():
    with pytest.raises(ValueError):
        moment(query((1,), (1,), (1,), (1,)))


def test_moment_cap():
    ones = (1,) * 7
    with pytest.raises(CapacityError):
        moment(query(ones, ones, ones, ones, 7))
    with pytest.raises(CapacityError):
        moment(query((1, 1, 1), (1, 1, 1), (1, 1, 1), (1, 1, 1), 3), 2)


def test_symbolic_single_branch():
    piecewise = moment_symbolic(query((1,), (1,), (1,), (1,)))
    assert len(piecewise.branches) == 1
    assert piecewise.stable.min_n == 1 and piecewise.stable.max_n is None
    assert str(piecewise.stable.function) == "1/n"


def test_symbolic_fourth_power():
    piecewise = moment_symbolic(query((1, 1), (1, 1), (1, 1), (1, 1)))
    assert [(b.min_n, b.max_n) for b in piecewise.branches] == [(1, 1), (2, None)]
    for branch in piecewise.branches:
        assert str(branch.function) == "2/(n^2+n)"


def test_symbolic_transposition():
    piecewise = moment_symbolic(query((1, 2), (1, 2), (1, 2), (2, 1)))
    assert [(b.min_n, b.max_n) for b in piecewise.branches] == [(2, None)]
    assert piecewise.stable.function == RationalFunctionInN(
        PolynomialInN([-1]), PolynomialInN([0, -1, 0, 1])
    )
    with pytest.raises(ValueError):
        piecewise.branch_for(1)


@pytest.mark.parametrize(
    "i,j,k,l",
    [
        ((1, 2, 1), (1, 2, 3), (2, 1, 1), (3, 1, 2)),
        ((1, 1, 1), (1, 2, 2), (1, 1, 1), (2, 1, 2)),
        ((1, 2, 3), (1, 2, 3), (1, 2, 3), (3, 2, 1)),
        ((1, 1, 2), (2, 1, 1), (1, 2, 1), (1, 1, 2)),
    ],
)
def test_symbolic_agrees_with_concrete(i, j, k, l):
    piecewise = moment_symbolic(query(i, j, k, l))
    for n in range(max(i + j + k + l), 8):
        assert piecewise.evaluate(n) == moment(query(i, j, k, l, n))


def test_branches_below_degree():
    q = query((1, 1, 1), (1, 1, 1), (1, 1, 1), (1, 1, 1))
    piecewise = moment_symbolic(q)
    assert [b.min_n for b in piecewise.branches] == [1, 2, 3]
    for n in (1, 2, 3, 4):
        assert piecewise.evaluate(n) == moment(q.at(n))
    assert piecewise.evaluate(1) == 1


def test_corner_effective_length():
    assert corner_effective_length(query((1, 1), (1, 1), (1, 1), (1, 1))) == 1
    assert corner_effective_length(query((1, 2), (1, 5), (2, 1), (4, 3))) == 2
    assert corner_effective_length(query((1, 2, 3), (1, 2, 3), (1, 2, 3), (1, 2, 3))) == 3


@pytest.mark.parametrize("d", range(1, 5))
def test_corner_never_changes_the_value(d):
    rng = np.random.default_rng(7 + d)
    for n in range(d, 7):
        for _ in range(10):
            i, j, k, l = (tuple(int(v) for v in rng.integers(1, n + 1, size=d)) for _ in range(4))
            q = query(i, j, k, l, n)
            assert moment(q) == moment(q, use_corner=False)


def test_same_type():
    assert same_type((1, 1, 2, 2, 5, 5, 5), (5, 1, 2, 1, 2, 5, 5))
    assert not same_type((1, 1, 2, 2, 5, 5, 5), (1, 2, 2, 2, 5, 5, 5))
    assert same_type((3, 1), (3, 1))
    with pytest.raises(DegreeMismatchError):
        same_type((1,), (1, 1))


def test_one_row_moment_examples():
    for n in range(1, 7):
        assert one_row_moment((1, 1), (1, 1), n) == Fraction(2, n * (n + 1))
        assert one_row_moment((1, 1), (1, 1), n) == moment(query((1, 1), (1, 1), (1, 1), (1, 1), n))
    for n in range(2, 7):
        assert one_row_moment((1, 2), (2, 1), n) == Fraction(1, n * (n + 1))
        assert one_row_moment((1, 1), (1, 2), n) == 0
    with pytest.raises(IndexRangeError):
        one_row_moment((1, 3), (3, 1), 2)


@pytest.mark.parametrize("d", range(1, 5))
def test_one_row_law(d):
    ones = (1,) * d
    largest = 4 if d < 4 else 3
    for n in range(1, 7):
        values = range(1, min(n, largest) + 1)
        for j in itertools.product(values, repeat=d):
            for l in itertools.product(values, repeat=d):
                value = one_row_moment(j, l, n)
                assert value == moment(query(ones, j, ones, l, n))
                assert value == one_row_moment_via_units(j, l, n)


@pytest.mark.parametrize("d", range(1, 6))
def test_row_norm(d):
    assert row_norm_identity(d)
    assert row_norm(d).evaluate(3) == product(d, 3) / product(d, 1)


@pytest.mark.parametrize("n,d", [(1, 1), (2, 2), (3, 2), (2, 3), (3, 3)])
def test_one_row_counting(n, d):
    for j in itertools.product(range(1, n + 1), repeat=d):
        for l in itertools.product(range(1, n + 1), repeat=d):
            assert one_row_moment_counting(j, l, n) == one_row_moment(j, l, n)


@pytest.mark.parametrize("n", range(1, 7))
def test_unitarity_sum_rule(n):
    assert sum(moment(query((1,), (j,), (1,), (j,), n)) for j in range(1, n + 1)) == 1


def test_rows_sum_rule():
    # the first two rows of U have unit norm
    n = 3
    total = sum(
        moment(query((1, 2), (j, m), (1, 2), (j, m), n))
        for j in range(1, n + 1)
        for m in range(1, n + 1)
    )
    assert total == 1


@pytest.mark.parametrize("n,d", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)])
def test_vanishing_rule(n, d):
    indices = list(itertools.product(range(1, n + 1), repeat=d))
    if n ** d > 9:
        rng = np.random.default_rng(7)
        draws = (
            tuple(indices[int(a)] for a in rng.integers(0, len(indices), size=4))
            for _ in range(3000)
        )
    else:
        draws = itertools.product(indices, repeat=4)
    for i, j, k, l in draws:
        if not same_type(i, k) or not same_type(j, l):
            assert moment(query(i, j, k, l, n)) == 0


@pytest.mark.parametrize("n,d", [(n, d) for n in (1, 2, 3) for d in (1, 2, 3)])
def test_against_dense_projection(n, d):
    units = unit_matrices(n, d)
    indices = basis(n, d)
    position = {index: a for a, index in enumerate(indices)}
    pairs = list(itertools.product(indices, repeat=2))
    for i, k in pairs:
        if not same_type(i, k):
            assert not any(project_elementary(units, n, i, k).flatten().tolist())
    if len(pairs) > 100:
        rng = np.random.default_rng(10 * n + d)
        picked = [pairs[int(a)] for a in rng.choice(len(pairs), size=30, replace=False)]
        for _ in range(30):
            i = indices[int(rng.integers(0, len(indices)))]
            picked.append((i, tuple(i[a] for a in rng.permutation(d))))
    else:
        picked = pairs
    for i, k in picked:
        projected = project_elementary(units, n, i, k)
        for j, l in pairs:
            assert moment(query(i, j, k, l, n)) == projected[position[j], position[l]]


@pytest.mark.parametrize("n", (2, 3))
def test_exhaustive_oracle(n):
    for d in (1, 2):
        indices = list(itertools.product(range(1, n + 1), repeat=d))
        for i, j, k, l in itertools.product(indices, repeat=4):
            q = query(i, j, k, l, n)
            assert moment(q) == wg_moment(q)


@pytest.mark.parametrize("d,n", [(d, n) for d in (3, 4) for n in range(d, 7)])
def test_random_oracle(d, n):
    rng = np.random.default_rng(1000 * d + n)
    nonzero = 0
    for _ in range(200):
        i = tuple(int(v) for v in rng.integers(1, n + 1, size=d))
        j = tuple(int(v) for v in rng.integers(1, n + 1, size=d))
        # K and L are rearrangements, so the moment is usually nonzero
        k = tuple(i[a] for a in rng.permutation(d))
        l = tuple(j[a] for a in rng.permutation(d))
        q = query(i, j, k, l, n)
        value = moment(q)
        assert value == moment(q, use_corner=False)
        assert value == wg_moment(q)
        nonzero += value != 0
    assert nonzero > 100


def test_expectation_coefficients():
    coefficients = expectation_coefficients((1, 1), (1, 1), 2)
    assert list(coefficients.values()) == [Fraction(1, 3)]
    ((shape, row, col),) = coefficients
    assert shape == YoungDiagram((2,)) and row == col
    assert expectation_coefficients((1, 1), (1, 2), 2) == {}
