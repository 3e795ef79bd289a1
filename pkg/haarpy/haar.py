"""
Exact Haar-unitary moments from the matrix units of C[S_d].

The integral of u_{i1 j1} ... u_{id jd} conj(u_{k1 l1}) ... conj(u_{kd ld}) is

    sum over lambda |- d with l(lambda) <= n, and T, S in Stab(lambda), of
    <e_{J,L}, E~_{T,S}> <E~_{T,S}, e_{I,K}> / ||E~_{T,S}||^2 (n)

which does not depend on how each unit is scaled. Units whose diagram is
longer than the largest index in play pair to zero with the elementary
tensors, so the sum is further cut at `corner_effective_length`.
"""
import math
import typing
import logging
import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import DegreeMismatchError
from .group_algebra import MatrixUnitRecord, matrix_units
from .models import MomentQuery
from .polynomials import PolynomialInN, RationalFunctionInN, rising_factorial
from .schur_weyl import (
    pair_over,
    check_indices,
    gram_pairing_poly,
    matching_permutations,
)
from .tableaux import (
    StandardTableau,
    YoungDiagram,
    all_permutations,
    check_degree,
    partitions,
)
from .utils import Cache

__all__ = [
    "MomentBranch",
    "PiecewiseMomentInN",
    "norm_polynomial",
    "moment",
    "moment_symbolic",
    "corner_effective_length",
    "same_type",
    "expectation_coefficients",
    "one_row_moment",
    "one_row_moment_via_units",
    "one_row_moment_counting",
    "row_norm",
    "row_norm_identity",
]

logger = logging.getLogger(__name__)

_norms = Cache("norm polynomials")


def norm_polynomial(unit: MatrixUnitRecord) -> PolynomialInN:
    """||p(E~_{T,S})||^2 as a polynomial in n"""
    return _norms.fetch(
        (unit.row, unit.col), lambda: gram_pairing_poly(unit.element, unit.element)
    )


def corner_effective_length(query: MomentQuery) -> int:
    return min(max(query.j + query.l), max(query.i + query.k))


def same_type(j: typing.Sequence[int], l: typing.Sequence[int]) -> bool:
    if len(j) != len(l):
        raise DegreeMismatchError(f"{tuple(j)} and {tuple(l)} differ in length.")
    return Counter(j) == Counter(l)


def _units_up_to(d: int, length: int, cap: typing.Optional[int]) -> typing.Iterator[MatrixUnitRecord]:
    for shape in partitions(d, cap):
        if shape.length <= length:
            yield from matrix_units(shape, cap)


def _terms(
    query: MomentQuery, length: int, cap: typing.Optional[int]
) -> typing.Iterator[typing.Tuple[Fraction, MatrixUnitRecord]]:
    """(left pairing * right pairing, unit) for every unit that contributes"""
    left = matching_permutations(query.j, query.l)
    right = matching_permutations(query.i, query.k)
    if not left or not right:
        return
    for unit in _units_up_to(query.degree, length, cap):
        a = pair_over(unit.element, left)
        if not a:
            continue
        b = pair_over(unit.element, right)
        if b:
            yield a * b, unit


def moment(
    query: MomentQuery, cap: typing.Optional[int] = None, use_corner: bool = True
) -> Fraction:
    if query.n is None:
        raise ValueError("moment needs a concrete n; use moment_symbolic for n free.")
    check_degree(query.degree, cap)
    length = min(query.n, query.degree)
    if use_corner:
        length = min(length, corner_effective_length(query))
    total = Fraction(0)
    # the gate l(lambda) <= n comes before any norm is evaluated at n
    for weight, unit in _terms(query, length, cap):
        total += weight / norm_polynomial(unit).evaluate(query.n)
    logger.debug(f"moment {query.monomial()} at n={query.n}: {total}")
    return total


@dataclass(frozen=True)
class MomentBranch:
    """the moment as a function of n on min_n <= n <= max_n (None: unbounded)"""

    min_n: int
    max_n: typing.Optional[int]
    function: RationalFunctionInN

    def covers(self, n: int) -> bool:
        return self.min_n <= n and (self.max_n is None or n <= self.max_n)


@dataclass(frozen=True)
class PiecewiseMomentInN:
    query: MomentQuery
    branches: typing.Tuple[MomentBranch, ...]

    @property
    def stable(self) -> MomentBranch:
        """the branch valid for every n >= max(d, largest index)"""
        return self.branches[-1]

    def branch_for(self, n: int) -> MomentBranch:
        for branch in self.branches:
            if branch.covers(n):
                return branch
        raise ValueError(f"n = {n} is below the largest index {self.query.max_index}.")

    def evaluate(self, n: int) -> Fraction:
        return self.branch_for(n).function.evaluate(n)


def moment_symbolic(query: MomentQuery, cap: typing.Optional[int] = None) -> PiecewiseMomentInN:
    """
    one branch per value p of min(n, d): below d the branch holds only at
    n == p, the last one holds for every n >= d
    """
    d = check_degree(query.degree, cap)
    corner = corner_effective_length(query)
    terms = list(_terms(query, min(d, corner), cap))
    branches = []
    for p in range(1, d + 1):
        if p < query.max_index and p < d:
            continue
        function = RationalFunctionInN.sum(
            (weight, norm_polynomial(unit))
            for weight, unit in terms
            if unit.shape.length <= min(p, corner)
        )
        if p < d:
            branches.append(MomentBranch(p, p, function))
        else:
            branches.append(MomentBranch(max(d, query.max_index), None, function))
    return PiecewiseMomentInN(query, tuple(branches))


UnitKey = typing.Tuple[YoungDiagram, StandardTableau, StandardTableau]


def expectation_coefficients(
    j: typing.Sequence[int], l: typing.Sequence[int], n: int, cap: typing.Optional[int] = None
) -> typing.Dict[UnitKey, Fraction]:
    """
    coefficients of the commutant projection of e_{J,L} on the units:
    <e_{J,L}, E~> / ||E~||^2 (n), zero ones left out
    """
    j = check_indices(j, n=n)
    l = check_indices(l, len(j), n)
    d = check_degree(len(j), cap)
    matches = matching_permutations(j, l)
    result = {}
    for unit in _units_up_to(d, min(n, d, max(j + l)), cap):
        value = pair_over(unit.element, matches)
        if value:
            result[(unit.shape, unit.row, unit.col)] = value / norm_polynomial(unit).evaluate(n)
    return result


def _one_row_checks(
    j: typing.Sequence[int], l: typing.Sequence[int], n: int, cap: typing.Optional[int]
) -> typing.Tuple[typing.Tuple[int, ...], typing.Tuple[int, ...]]:
    j = check_indices(j, n=n)
    l = check_indices(l, len(j), n)
    check_degree(len(j), cap)
    return j, l


def one_row_moment(
    j: typing.Sequence[int], l: typing.Sequence[int], n: int, cap: typing.Optional[int] = None
) -> Fraction:
    """
    the integral of u_{1 j1} ... u_{1 jd} conj(u_{1 l1}) ... conj(u_{1 ld}):
    prod r_i! / n(n+1)...(n+d-1) when J and L have the same type, else 0
    """
    j, l = _one_row_checks(j, l, n, cap)
    if not same_type(j, l):
        return Fraction(0)
    numerator = math.prod(math.factorial(r) for r in Counter(j).values())
    return Fraction(numerator) / rising_factorial(len(j)).evaluate(n)


def row_norm(d: int, cap: typing.Optional[int] = None) -> PolynomialInN:
    """||E_T||^2 for the single tableau T of shape (d)"""
    (unit,) = matrix_units(YoungDiagram((d,)), cap)
    return norm_polynomial(unit)


def row_norm_identity(d: int, cap: typing.Optional[int] = None) -> bool:
    """||E_(d)||^2 == n(n+1)...(n+d-1) / d! as polynomials"""
    return row_norm(d, cap) == rising_factorial(d) * Fraction(1, math.factorial(d))


def one_row_moment_via_units(
    j: typing.Sequence[int], l: typing.Sequence[int], n: int, cap: typing.Optional[int] = None
) -> Fraction:
    """k / (d! ||E_T||^2) with k the number of sigma taking J to L"""
    j, l = _one_row_checks(j, l, n, cap)
    d = len(j)
    k = len(matching_permutations(l, j))
    return Fraction(k) / (math.factorial(d) * row_norm(d, cap).evaluate(n))


def one_row_moment_counting(
    j: typing.Sequence[int], l: typing.Sequence[int], n: int, cap: typing.Optional[int] = None
) -> Fraction:
    """
    d! * #{sigma : sigma J == L} / #{(sigma, beta, I) : sigma I == beta I},
    I running over all of [n]^d; small n and d only
    """
    j, l = _one_row_checks(j, l, n, cap)
    d = len(j)
    k = len(matching_permutations(l, j))
    group = all_permutations(d)
    orbits = 0
    for indices in itertools.product(range(1, n + 1), repeat=d):
        # (sigma, beta) pairs agreeing on I: |Stab(I)| * d!
        orbits += len(matching_permutations(indices, indices)) * len(group)
    return Fraction(math.factorial(d) * k, orbits)
