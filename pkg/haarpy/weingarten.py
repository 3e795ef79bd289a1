"""
Classical Weingarten calculus, used as an independent check of `haar.moment`.

Rows and columns of every matrix follow `all_permutations(d)`, the
lexicographic order of one-line notation with the identity first.
"""
import typing
import logging
from fractions import Fraction
from dataclasses import dataclass

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .config import Config
from .exceptions import CapacityError, SingularGramError
from .models import MomentQuery
from .schur_weyl import matching_permutations
from .tableaux import Permutation, all_permutations
from .utils import Cache

__all__ = [
    "GramMatrix",
    "WeingartenMatrix",
    "check_oracle_degree",
    "gram_matrix",
    "weingarten_matrix",
    "weingarten_function",
    "wg_moment",
    "dump_matrices",
]

logger = logging.getLogger(__name__)


def check_oracle_degree(d: int, cap: typing.Optional[int] = None) -> int:
    if cap is None:
        cap = Config().ORACLE_CAP
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}.")
    if d > cap:
        raise CapacityError("oracle degree", d, cap)
    return d


@dataclass(frozen=True)
class GramMatrix:
    degree: int
    n: int
    entries: typing.Tuple[typing.Tuple[int, ...], ...]

    @property
    def order(self) -> typing.Tuple[Permutation, ...]:
        return all_permutations(self.degree)

    def entry(self, sigma: Permutation, tau: Permutation) -> int:
        position = _positions(self.degree)
        return self.entries[position[sigma]][position[tau]]


@dataclass(frozen=True)
class WeingartenMatrix:
    degree: int
    n: int
    entries: typing.Tuple[typing.Tuple[Fraction, ...], ...]

    @property
    def order(self) -> typing.Tuple[Permutation, ...]:
        return all_permutations(self.degree)

    def entry(self, sigma: Permutation, tau: Permutation) -> Fraction:
        position = _positions(self.degree)
        return self.entries[position[sigma]][position[tau]]


_position_tables: typing.Dict[int, typing.Dict[Permutation, int]] = {}


def _positions(d: int) -> typing.Dict[Permutation, int]:
    if d not in _position_tables:
        _position_tables[d] = {p: a for a, p in enumerate(all_permutations(d))}
    return _position_tables[d]


def gram_matrix(d: int, n: int, cap: typing.Optional[int] = None) -> GramMatrix:
    """G(sigma, tau) = n^cycles(sigma^-1 tau)"""
    check_oracle_degree(d, cap)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}.")
    order = all_permutations(d)
    inverses = [sigma.inverse() for sigma in order]
    powers = [n ** c for c in range(d + 1)]
    entries = tuple(
        tuple(powers[(inverse * tau).cycle_count()] for tau in order)
        for inverse in inverses
    )
    return GramMatrix(d, n, entries)


_inverses = Cache("weingarten matrices")


def weingarten_matrix(d: int, n: int, cap: typing.Optional[int] = None) -> WeingartenMatrix:
    check_oracle_degree(d, cap)
    if n < d:
        raise SingularGramError(
            f"Gram matrix possibly singular for n = {n} < d = {d}; no pseudo-inverse."
        )
    return _inverses.fetch((d, n), lambda: _invert(gram_matrix(d, n, cap)))


def _invert(gram: GramMatrix) -> WeingartenMatrix:
    size = len(gram.entries)
    matrix = DomainMatrix(
        [[QQ(value) for value in row] for row in gram.entries], (size, size), QQ
    )
    inverse = matrix.inv().to_Matrix()
    entries = tuple(
        tuple(Fraction(int(inverse[a, b].p), int(inverse[a, b].q)) for b in range(size))
        for a in range(size)
    )
    logger.debug(f"inverted the {size}x{size} Gram matrix at n={gram.n}")
    return WeingartenMatrix(gram.degree, gram.n, entries)


def weingarten_function(
    d: int, n: int, cap: typing.Optional[int] = None
) -> typing.Dict[Permutation, Fraction]:
    """Wg(sigma) = W(e, sigma); W(sigma, tau) only depends on sigma^-1 tau"""
    weingarten = weingarten_matrix(d, n, cap)
    return dict(zip(weingarten.order, weingarten.entries[0]))


def wg_moment(query: MomentQuery, cap: typing.Optional[int] = None) -> Fraction:
    """
    sum over sigma with i_a == k_sigma(a) and tau with j_a == l_tau(a)
    of W(sigma, tau)
    """
    if query.n is None:
        raise ValueError("the Weingarten oracle needs a concrete n.")
    weingarten = weingarten_matrix(query.degree, query.n, cap)
    position = _positions(query.degree)
    # i_a == k_sigma(a) says sigma^-1 . K == I
    rows = [position[p.inverse()] for p in matching_permutations(query.i, query.k)]
    cols = [position[p.inverse()] for p in matching_permutations(query.j, query.l)]
    return sum(
        (weingarten.entries[a][b] for a in sorted(rows) for b in sorted(cols)),
        Fraction(0),
    )


def dump_matrices(d: int, n: int, cap: typing.Optional[int] = None) -> typing.Dict[str, typing.Any]:
    """G and W side by side, entries as "p/q" strings"""
    gram = gram_matrix(d, n, cap)
    weingarten = weingarten_matrix(d, n, cap)
    return {
        "degree": d,
        "n": n,
        "order": [list(p) for p in gram.order],
        "gram": [[str(Fraction(value)) for value in row] for row in gram.entries],
        "weingarten": [[str(value) for value in row] for row in weingarten.entries],
    }
