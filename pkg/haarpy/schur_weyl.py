"""
Hilbert-Schmidt pairings under the Schur-Weyl representation p of S_d on
(C^n)^{⊗d}, without ever building an n^d x n^d operator.

<A, B> = Tr(A* B), conjugate-linear in the first slot. Every element met in
this package has rational coefficients, so the convention never shows.
"""
import typing
import logging
from fractions import Fraction
from functools import lru_cache

from .exceptions import DegreeMismatchError, IndexRangeError
from .group_algebra import AlgebraElement, adjoint, multiply
from .polynomials import PolynomialInN
from .tableaux import Permutation
from .types import Indices

__all__ = [
    "check_indices",
    "act_on_index",
    "cycle_count",
    "matching_permutations",
    "pair_over",
    "pair_with_elementary",
    "pair_with_elementary_adjoint",
    "trace_poly",
    "gram_pairing_poly",
]

logger = logging.getLogger(__name__)


def check_indices(
    indices: typing.Sequence[int], d: typing.Optional[int] = None, n: typing.Optional[int] = None
) -> Indices:
    values = tuple(indices)
    if not values:
        raise DegreeMismatchError("index tuples must not be empty.")
    if d is not None and len(values) != d:
        raise DegreeMismatchError(f"index tuple {values} does not have length {d}.")
    for value in values:
        if value < 1 or (n is not None and value > n):
            bound = "" if n is None else f" (n = {n})"
            raise IndexRangeError(f"index {value} out of range in {values}{bound}.")
    return values


def act_on_index(sigma: Permutation, indices: typing.Sequence[int]) -> Indices:
    """(sigma . I)_b = I_{sigma^-1(b)}, a left action"""
    if len(sigma) != len(indices):
        raise DegreeMismatchError(
            f"{sigma.cycle_notation()} acts on {len(sigma)} factors, got {len(indices)}."
        )
    result = [0] * len(indices)
    for a, value in enumerate(indices):
        result[sigma[a] - 1] = value
    return tuple(result)


def cycle_count(sigma: Permutation) -> int:
    return sigma.cycle_count()


@lru_cache(maxsize=65536)
def matching_permutations(
    target: Indices, source: Indices
) -> typing.FrozenSet[Permutation]:
    """every sigma with sigma . source == target"""
    d = len(source)
    if len(target) != d:
        raise DegreeMismatchError(f"{target} and {source} differ in length.")
    images = [0] * d
    used = [False] * d
    found: typing.List[Permutation] = []

    # sigma(a) must land on a slot b with target[b] == source[a]
    def place(a: int) -> None:
        if a == d:
            found.append(Permutation._trusted(images))
            return
        for b in range(d):
            if not used[b] and target[b] == source[a]:
                used[b] = True
                images[a] = b + 1
                place(a + 1)
                used[b] = False

    place(0)
    return frozenset(found)


def pair_over(x: AlgebraElement, permutations: typing.Iterable[Permutation]) -> Fraction:
    return sum((x.coefficient(p) for p in permutations), Fraction(0))


def pair_with_elementary(
    x: AlgebraElement, j: typing.Sequence[int], l: typing.Sequence[int]
) -> Fraction:
    """<e_{J,L}, p(x)>: the coefficients of x on {sigma : sigma . L == J}"""
    j = check_indices(j, x.degree)
    l = check_indices(l, x.degree)
    return pair_over(x, matching_permutations(j, l))


def pair_with_elementary_adjoint(
    x: AlgebraElement, i: typing.Sequence[int], k: typing.Sequence[int]
) -> Fraction:
    """<p(x), e_{I,K}>, the conjugate of <e_{I,K}, p(x)>"""
    return pair_with_elementary(x, i, k)


def trace_poly(x: AlgebraElement) -> PolynomialInN:
    """Tr p(x) = sum of x_sigma * n^cycles(sigma)"""
    coeffs = [Fraction(0)] * (x.degree + 1)
    for sigma, coefficient in x.items():
        coeffs[sigma.cycle_count()] += coefficient
    return PolynomialInN(coeffs)


def gram_pairing_poly(x: AlgebraElement, y: AlgebraElement) -> PolynomialInN:
    """
    <p(x), p(y)> = Tr p(x* y) as a polynomial in n, summing
    x_sigma * y_tau * n^cycles(sigma^-1 tau) through the product x* y.
    """
    if x.degree != y.degree:
        raise DegreeMismatchError(f"degrees {x.degree} and {y.degree} differ.")
    return trace_poly(multiply(adjoint(x), y))
