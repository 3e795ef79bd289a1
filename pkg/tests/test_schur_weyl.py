import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from haarpy.exceptions import DegreeMismatchError, IndexRangeError
from haarpy.group_algebra import AlgebraElement, from_permutation, identity, matrix_units
from haarpy.polynomials import PolynomialInN
from haarpy.schur_weyl import (
    act_on_index,
    check_indices,
    cycle_count,
    gram_pairing_poly,
    matching_permutations,
    pair_with_elementary,
    pair_with_elementary_adjoint,
    trace_poly,
)
from haarpy.tableaux import Permutation, partitions

from .dense import basis, dense, entry, hilbert_schmidt

half = Fraction(1, 2)
swap = from_permutation(Permutation([2, 1]))
symmetrizer = (identity(2) + swap) * half
antisymmetrizer = (identity(2) - swap) * half


def units_of_degree(d):
    return [u for s in partitions(d) for u in matrix_units(s)]


def test_act_on_index():
    assert act_on_index(Permutation.identity(3), (4, 5, 6)) == (4, 5, 6)
    assert act_on_index(Permutation([2, 1]), (5, 7)) == (7, 5)
    assert act_on_index(Permutation([2, 3, 1]), ("a", "b", "c")) == ("c", "a", "b")
    with pytest.raises(DegreeMismatchError):
        act_on_index(Permutation([2, 1]), (1, 2, 3))


@given(
    st.permutations([1, 2, 3, 4]).map(Permutation),
    st.permutations([1, 2, 3, 4]).map(Permutation),
    st.tuples(*[st.integers(min_value=1, max_value=3)] * 4),
)
def test_left_action(sigma, tau, indices):
    assert act_on_index(sigma * tau, indices) == act_on_index(sigma, act_on_index(tau, indices))


def test_cycle_count():
    assert cycle_count(Permutation.identity(4)) == 4
    assert cycle_count(Permutation.transposition(4, 1, 3)) == 3
    assert cycle_count(Permutation.from_cycles(4, (1, 2, 3, 4))) == 1


def test_check_indices():
    assert check_indices([1, 2], 2, 3) == (1, 2)
    with pytest.raises(DegreeMismatchError):
        check_indices(())
    with pytest.raises(DegreeMismatchError):
        check_indices((1, 2), 3)
    with pytest.raises(IndexRangeError):
        check_indices((1, 4), n=3)
    with pytest.raises(IndexRangeError):
        check_indices((0, 1))


def test_matching_permutations():
    assert matching_permutations((1, 2), (2, 1)) == {Permutation([2, 1])}
    assert matching_permutations((1, 1), (1, 1)) == {Permutation([1, 2]), Permutation([2, 1])}
    assert matching_permutations((1, 1), (1, 2)) == frozenset()
    for sigma in matching_permutations((3, 1, 3, 2), (1, 3, 2, 3)):
        assert act_on_index(sigma, (1, 3, 2, 3)) == (3, 1, 3, 2)
    assert len(matching_permutations((1, 1, 2), (2, 1, 1))) == 2


def test_pair_with_elementary():
    assert pair_with_elementary(identity(2), (1, 2), (1, 2)) == 1
    assert pair_with_elementary(symmetrizer, (1, 1), (1, 1)) == 1
    assert pair_with_elementary(antisymmetrizer, (1, 1), (1, 1)) == 0
    assert pair_with_elementary_adjoint(swap, (1, 2), (2, 1)) == 1
    with pytest.raises(DegreeMismatchError):
        pair_with_elementary(identity(2), (1,), (1,))


def test_gram_pairing_examples():
    for d in (1, 2, 3):
        assert gram_pairing_poly(identity(d), identity(d)) == PolynomialInN.monomial(d)
    assert gram_pairing_poly(symmetrizer, symmetrizer) == PolynomialInN([0, 1, 1]) * half
    assert gram_pairing_poly(antisymmetrizer, antisymmetrizer) == PolynomialInN([0, -1, 1]) * half
    assert trace_poly(swap) == PolynomialInN([0, 1])
    with pytest.raises(DegreeMismatchError):
        gram_pairing_poly(identity(2), identity(3))


@pytest.mark.parametrize("d", range(2, 5))
def test_gram_pairing_leading_coefficient(d):
    for unit in units_of_degree(d):
        x = unit.element
        norm = gram_pairing_poly(x, x)
        assert norm.degree == d
        assert norm.leading_coefficient == sum(c * c for _, c in x.items())


@pytest.mark.parametrize("d", range(2, 6))
def test_kernel(d):
    for unit in units_of_degree(d):
        norm = gram_pairing_poly(unit.element, unit.element)
        for n in range(1, 7):
            if n < unit.shape.length:
                assert norm.evaluate(n) == 0
            else:
                assert norm.evaluate(n) > 0


@pytest.mark.parametrize("d", range(2, 5))
def test_tensor_orthogonality(d):
    units = units_of_degree(d)
    for a, first in enumerate(units):
        for second in units[a + 1:]:
            assert gram_pairing_poly(first.element, second.element).is_zero()


@pytest.mark.parametrize("n,d", [(n, d) for n in (1, 2, 3) for d in (1, 2, 3)])
def test_against_dense(n, d):
    elements = [u.element for u in units_of_degree(d)]
    elements.append(
        AlgebraElement(d, {p: Fraction(k + 1, 3) for k, p in enumerate(itertools.permutations(range(1, d + 1)))})
    )
    matrices = [dense(x, n) for x in elements]
    indices = basis(n, d)
    for x, matrix in zip(elements, matrices):
        for j, l in itertools.product(indices, indices):
            assert pair_with_elementary(x, j, l) == entry(matrix, n, j, l)
    for x, a in zip(elements, matrices):
        for y, b in zip(elements, matrices):
            assert gram_pairing_poly(x, y).evaluate(n) == hilbert_schmidt(a, b)


def test_projection_rank():
    # C^3 x C^3 splits into dimensions 6 and 3
    assert gram_pairing_poly(symmetrizer, symmetrizer).evaluate(3) == 6
    assert gram_pairing_poly(antisymmetrizer, antisymmetrizer).evaluate(3) == 3
