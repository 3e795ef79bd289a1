"""
Exact arithmetic in the group algebra of S_d with rational coefficients.

Matrix units are kept unnormalized, E~_{T,S} = E_T * pi * E_S with pi * S == T;
the normalizing constant is carried as the rational c**2 so nothing here
leaves exact arithmetic except the Young orthogonal form.
"""
import math
import typing
import logging
from fractions import Fraction
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .exceptions import DegreeMismatchError, IndexRangeError
from .tableaux import (
    ActionKind,
    Permutation,
    StandardTableau,
    YoungDiagram,
    admissible_path,
    apply_coxeter,
    axial_distance,
    check_degree,
    content,
    extensions,
    partitions,
    removal,
    sigma_permutation,
    standard_tableaux,
)
from .utils import Cache

__all__ = [
    "AlgebraElement",
    "MatrixUnitRecord",
    "from_permutation",
    "identity",
    "zero",
    "add",
    "scalar_mul",
    "proportionality",
    "multiply",
    "adjoint",
    "regular_trace",
    "inner",
    "jucys_murphy",
    "minimal_projection",
    "matrix_unit_unnormalized",
    "matrix_units",
    "normalization_c_squared",
    "c_squared_along",
    "embed",
    "conditional_expectation",
    "decompose",
    "reconstruct",
    "conditional_expectation_constant",
    "lemma_coefficients",
    "young_orthogonal_matrix",
    "young_orthogonal_representation",
    "rational_sqrt",
]

logger = logging.getLogger(__name__)

Scalar = typing.Union[int, Fraction]


class AlgebraElement:
    """
    An immutable sparse linear combination of permutations of one degree.
    Zero coefficients are never stored.
    """

    __slots__ = ("degree", "_terms")

    def __init__(
        self, degree: int, terms: typing.Mapping[Permutation, Scalar] = {}
    ) -> None:
        clean: typing.Dict[Permutation, Fraction] = {}
        for permutation, coefficient in terms.items():
            if len(permutation) != degree:
                raise DegreeMismatchError(
                    f"{permutation!r} does not belong to S_{degree}."
                )
            coefficient = Fraction(coefficient)
            if coefficient:
                clean[Permutation(permutation)] = coefficient
        self.degree = degree
        self._terms = clean

    @classmethod
    def _wrap(cls, degree: int, terms: typing.Dict[Permutation, Fraction]) -> "AlgebraElement":
        element = cls.__new__(cls)
        element.degree = degree
        element._terms = {p: c for p, c in terms.items() if c}
        return element

    @property
    def terms(self) -> typing.Mapping[Permutation, Fraction]:
        return dict(self._terms)

    def items(self) -> typing.Iterator[typing.Tuple[Permutation, Fraction]]:
        return iter(sorted(self._terms.items()))

    def support(self) -> typing.List[Permutation]:
        return sorted(self._terms)

    def coefficient(self, permutation: Permutation) -> Fraction:
        return self._terms.get(permutation, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def _check(self, other: "AlgebraElement") -> None:
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"cannot combine degree {self.degree} with degree {other.degree}."
            )

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return add(self, other)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement._wrap(self.degree, {p: -c for p, c in self._terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __mul__(self, other: typing.Any) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return scalar_mul(self, other)

    def __rmul__(self, other: Scalar) -> "AlgebraElement":
        return scalar_mul(self, other)

    def __eq__(self, other: typing.Any) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        text = ""
        for permutation, coefficient in self.items():
            magnitude = abs(coefficient)
            word = permutation.cycle_notation()
            body = word if magnitude == 1 else f"{magnitude}·{word}"
            if not text:
                text = ("-" if coefficient < 0 else "") + body
            else:
                text += (" - " if coefficient < 0 else " + ") + body
        return text

    def __repr__(self) -> str:
        return f"AlgebraElement(degree={self.degree}, {self})"


def from_permutation(permutation: Permutation, coefficient: Scalar = 1) -> AlgebraElement:
    return AlgebraElement(len(permutation), {permutation: coefficient})


def identity(d: int) -> AlgebraElement:
    return AlgebraElement._wrap(d, {Permutation.identity(d): Fraction(1)})


def zero(d: int) -> AlgebraElement:
    return AlgebraElement._wrap(d, {})


def add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x._check(y)
    terms = dict(x._terms)
    for permutation, coefficient in y._terms.items():
        terms[permutation] = terms.get(permutation, Fraction(0)) + coefficient
    return AlgebraElement._wrap(x.degree, terms)


def scalar_mul(x: AlgebraElement, scalar: Scalar) -> AlgebraElement:
    scalar = Fraction(scalar)
    return AlgebraElement._wrap(x.degree, {p: c * scalar for p, c in x._terms.items()})


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """sum of c_sigma * d_tau * (sigma tau)"""
    x._check(y)
    right = [([t - 1 for t in tau], coefficient) for tau, coefficient in y._terms.items()]
    terms: typing.Dict[Permutation, Fraction] = {}
    for sigma, a in x._terms.items():
        image = sigma.__getitem__
        for tau0, b in right:
            key = Permutation._trusted(map(image, tau0))
            terms[key] = terms.get(key, 0) + a * b
    return AlgebraElement._wrap(x.degree, terms)


def adjoint(x: AlgebraElement) -> AlgebraElement:
    """sigma -> sigma^-1; coefficients are real so they stay put"""
    return AlgebraElement._wrap(x.degree, {p.inverse(): c for p, c in x._terms.items()})


def regular_trace(x: AlgebraElement) -> Fraction:
    """normalized trace: the coefficient of the identity"""
    return x.coefficient(Permutation.identity(x.degree))


def inner(x: AlgebraElement, y: AlgebraElement) -> Fraction:
    """tau(x* y), computed coefficient-wise"""
    x._check(y)
    if len(x) > len(y):
        x, y = y, x
    return sum((c * y.coefficient(p) for p, c in x._terms.items()), Fraction(0))


def jucys_murphy(i: int, d: int) -> AlgebraElement:
    """X_i = (1 i) + ... + (i-1 i); X_1 = 0"""
    if not 1 <= i <= d:
        raise IndexRangeError(f"Jucys-Murphy index {i} out of range 1..{d}.")
    return AlgebraElement._wrap(
        d, {Permutation.transposition(d, j, i): Fraction(1) for j in range(1, i)}
    )


_projections = Cache("minimal projections")


def minimal_projection(
    tableau: StandardTableau, cap: typing.Optional[int] = None
) -> AlgebraElement:
    """
    E_T as a polynomial in the Jucys-Murphy elements, built along the growth
    path: E_T = E_{T-bar} * prod over S != T with S-bar == T-bar of
    (a_d(S) - X_d) / (a_d(S) - a_d(T)).
    """
    check_degree(tableau.degree, cap)
    return _projections.fetch(tableau, lambda: _build_projection(tableau))


def _build_projection(tableau: StandardTableau) -> AlgebraElement:
    parent = removal(tableau)
    if parent is None:
        return identity(1)
    d = tableau.degree
    result = embed(_projections.fetch(parent, lambda: _build_projection(parent)), d)
    x = jucys_murphy(d, d)
    one = identity(d)
    target = content(tableau.box_of(d))
    for sibling in extensions(parent):
        if sibling == tableau:
            continue
        other = content(sibling.box_of(d))
        # contents of distinct addable cells differ, the denominator is a nonzero integer
        factor = (one * other - x) * Fraction(1, other - target)
        result = result * factor
    return result


@dataclass(frozen=True)
class MatrixUnitRecord:
    shape: YoungDiagram
    row: StandardTableau
    col: StandardTableau
    element: AlgebraElement
    c_squared: Fraction

    @property
    def is_diagonal(self) -> bool:
        return self.row == self.col


def c_squared_along(tableau: StandardTableau, path: typing.Sequence[int]) -> Fraction:
    """product of r**2 / (r**2 - 1) over the axial distances met along `path`"""
    result = Fraction(1)
    current = tableau
    for i in path:
        action = apply_coxeter(current, i)
        if action.kind is not ActionKind.STANDARD:
            raise IndexRangeError(f"s_{i} is not admissible for {current}.")
        r = axial_distance(current, i)
        result *= Fraction(r * r, r * r - 1)
        current = typing.cast(StandardTableau, action.tableau)
    return result


def normalization_c_squared(row: StandardTableau, col: StandardTableau) -> Fraction:
    return c_squared_along(row, admissible_path(row, col))


_units = Cache("matrix units")


def matrix_unit_unnormalized(
    row: StandardTableau, col: StandardTableau, cap: typing.Optional[int] = None
) -> MatrixUnitRecord:
    check_degree(row.degree, cap)

    def build() -> MatrixUnitRecord:
        c_squared = normalization_c_squared(row, col)
        d = row.degree
        if row == col:
            element = minimal_projection(row, d)
        else:
            pi = from_permutation(sigma_permutation(col, row))
            element = minimal_projection(row, d) * pi * minimal_projection(col, d)
        return MatrixUnitRecord(row.shape, row, col, element, c_squared)

    return _units.fetch((row, col), build)


def matrix_units(
    shape: YoungDiagram, cap: typing.Optional[int] = None
) -> typing.List[MatrixUnitRecord]:
    tableaux = standard_tableaux(shape, cap)
    return [matrix_unit_unnormalized(t, s, cap) for t in tableaux for s in tableaux]


def embed(x: AlgebraElement, target_degree: int) -> AlgebraElement:
    if target_degree < x.degree:
        raise DegreeMismatchError(
            f"cannot embed degree {x.degree} into degree {target_degree}."
        )
    if target_degree == x.degree:
        return x
    return AlgebraElement._wrap(
        target_degree, {p.extend(target_degree): c for p, c in x._terms.items()}
    )


def conditional_expectation(x: AlgebraElement) -> AlgebraElement:
    """keep the terms fixing the last point, as an element one degree lower"""
    if x.degree < 2:
        raise DegreeMismatchError("conditional expectation needs degree >= 2.")
    last = x.degree
    return AlgebraElement._wrap(
        last - 1, {p.restrict(): c for p, c in x._terms.items() if p.fixes(last)}
    )


UnitKey = typing.Tuple[YoungDiagram, StandardTableau, StandardTableau]


def decompose(
    x: AlgebraElement, cap: typing.Optional[int] = None
) -> typing.Dict[UnitKey, Fraction]:
    """coefficients of x on the unnormalized units, zero ones left out"""
    result: typing.Dict[UnitKey, Fraction] = {}
    for shape in partitions(x.degree, cap):
        for unit in matrix_units(shape, cap):
            alpha = inner(unit.element, x) / inner(unit.element, unit.element)
            if alpha:
                result[(shape, unit.row, unit.col)] = alpha
    return result


def reconstruct(
    coefficients: typing.Mapping[UnitKey, Scalar], d: int, cap: typing.Optional[int] = None
) -> AlgebraElement:
    check_degree(d, cap)
    result = zero(d)
    for (_, row, col), alpha in coefficients.items():
        result = result + matrix_unit_unnormalized(row, col, d).element * alpha
    return result


def rational_sqrt(value: Fraction) -> typing.Optional[Fraction]:
    if value < 0:
        return None
    p, q = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if p * p == value.numerator and q * q == value.denominator:
        return Fraction(p, q)
    return None


def proportionality(x: AlgebraElement, y: AlgebraElement) -> typing.Optional[Fraction]:
    """the rational rho with x == rho * y, or None when there is none"""
    if y.is_zero():
        return Fraction(0) if x.is_zero() else None
    anchor = y.support()[0]
    rho = x.coefficient(anchor) / y.coefficient(anchor)
    return rho if x == y * rho else None


@dataclass(frozen=True)
class ConditionalExpectationReport:
    row: StandardTableau
    col: StandardTableau
    proportional: bool
    constant_squared: typing.Optional[Fraction]
    constant: typing.Optional[Fraction]
    # f_lambda / ((|lambda| - 1) f_beta) and f_lambda / (|lambda| f_beta)
    candidate_size_minus_one: typing.Optional[Fraction]
    candidate_size: typing.Optional[Fraction]

    @property
    def matches(self) -> typing.Optional[str]:
        if self.constant is None:
            return None
        if self.constant == self.candidate_size:
            return "size"
        if self.constant == self.candidate_size_minus_one:
            return "size_minus_one"
        return None


def conditional_expectation_constant(
    row: StandardTableau, col: StandardTableau, cap: typing.Optional[int] = None
) -> ConditionalExpectationReport:
    """
    compare the projection of the normalized unit E_{T,S} (degree d+1) with
    E_{T-bar,S-bar}; the constant is measured, never assumed
    """
    d = check_degree(row.degree, cap)
    unit = matrix_unit_unnormalized(row, col, d)
    image = conditional_expectation(unit.element)
    row_bar = typing.cast(StandardTableau, removal(row))
    col_bar = typing.cast(StandardTableau, removal(col))

    if row_bar.shape != col_bar.shape:
        vanishes = image.is_zero()
        return ConditionalExpectationReport(
            row, col, vanishes, Fraction(0) if vanishes else None,
            Fraction(0) if vanishes else None, None, None,
        )

    lower = matrix_unit_unnormalized(row_bar, col_bar, d)
    rho = proportionality(image, lower.element)
    size = row.degree
    ratio = Fraction(
        len(standard_tableaux(row.shape, d)), len(standard_tableaux(row_bar.shape, d))
    )
    candidates = (ratio / (size - 1), ratio / size)
    if rho is None:
        return ConditionalExpectationReport(row, col, False, None, None, *candidates)

    squared = rho * rho * unit.c_squared / lower.c_squared
    root = rational_sqrt(squared)
    constant = None if root is None else (root if rho >= 0 else -root)
    logger.debug(f"E({row}, {col}) = {constant} (squared {squared})")
    return ConditionalExpectationReport(row, col, True, squared, constant, *candidates)


@dataclass(frozen=True)
class BranchingReport:
    """
    an embedded unit of degree d written on the units of degree d+1, next to
    the squared coefficients c^2(R,M) / c^2(T,S) it should have
    """

    row: StandardTableau
    col: StandardTableau
    observed: typing.Dict[typing.Tuple[StandardTableau, StandardTableau], Fraction]
    expected_squared: typing.Dict[typing.Tuple[StandardTableau, StandardTableau], Fraction]

    @property
    def holds(self) -> bool:
        if set(self.observed) != set(self.expected_squared):
            return False
        return all(
            value > 0 and value * value == self.expected_squared[key]
            for key, value in self.observed.items()
        )


def lemma_coefficients(
    row: StandardTableau, col: StandardTableau, cap: typing.Optional[int] = None
) -> BranchingReport:
    d = check_degree(row.degree + 1, cap)
    unit = matrix_unit_unnormalized(row, col, d)
    lifted = embed(unit.element, d)
    observed = {
        (r, m): alpha for (_, r, m), alpha in decompose(lifted, d).items()
    }
    expected = {}
    for r in extensions(row):
        for m in extensions(col):
            if r.shape == m.shape:
                expected[(r, m)] = normalization_c_squared(r, m) / unit.c_squared
    return BranchingReport(row, col, observed, expected)


@lru_cache(maxsize=None)
def young_orthogonal_matrix(shape: YoungDiagram, i: int) -> np.ndarray:
    """
    the orthogonal matrix of s_i on the Young basis, rows and columns in
    `standard_tableaux(shape)` order
    """
    tableaux = standard_tableaux(shape)
    if not 1 <= i <= shape.size - 1:
        raise IndexRangeError(f"Coxeter index {i} out of range 1..{shape.size - 1}.")
    index = {t: a for a, t in enumerate(tableaux)}
    matrix = np.zeros((len(tableaux), len(tableaux)))
    for a, tableau in enumerate(tableaux):
        action = apply_coxeter(tableau, i)
        if action.kind is ActionKind.SAME_ROW:
            matrix[a, a] = 1.0
        elif action.kind is ActionKind.SAME_COLUMN:
            matrix[a, a] = -1.0
        else:
            r = axial_distance(tableau, i)
            matrix[a, a] = 1.0 / r
            matrix[index[action.tableau], a] = math.sqrt(1.0 - 1.0 / (r * r))
    matrix.setflags(write=False)
    return matrix


def young_orthogonal_representation(
    shape: YoungDiagram, x: typing.Union[AlgebraElement, Permutation]
) -> np.ndarray:
    size = len(standard_tableaux(shape))
    if isinstance(x, Permutation):
        x = from_permutation(x)
    if x.degree != shape.size:
        raise DegreeMismatchError(f"{shape} has size {shape.size}, element degree {x.degree}.")
    result = np.zeros((size, size))
    for permutation, coefficient in x.items():
        matrix = np.eye(size)
        for i in permutation.coxeter_word():
            matrix = matrix @ young_orthogonal_matrix(shape, i)
        result += float(coefficient) * matrix
    return result
