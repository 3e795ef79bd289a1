"""
Algebraic identities checked end to end at a given degree.

Each property is registered with a level; `fast` runs the cheap ones,
`full` runs everything, including the Weingarten oracle comparison.
"""
import math
import typing
import logging
import itertools
from fractions import Fraction

import click
import numpy as np

from .config import Config
from .group_algebra import (
    adjoint,
    c_squared_along,
    conditional_expectation,
    conditional_expectation_constant,
    embed,
    identity,
    inner,
    jucys_murphy,
    lemma_coefficients,
    matrix_unit_unnormalized,
    matrix_units,
    minimal_projection,
    proportionality,
    regular_trace,
    zero,
)
from .haar import moment, moment_symbolic, norm_polynomial, one_row_moment
from .models import CliConfig, MomentQuery
from .render import render
from .tableaux import (
    ActionKind,
    StandardTableau,
    apply_coxeter,
    check_degree,
    content_vector,
    extensions,
    minimal_admissible_paths,
    partitions,
    sigma_permutation,
    standard_tableaux,
)
from .weingarten import wg_moment

__all__ = ["LEVELS", "Caps", "Property", "Outcome", "registry", "run", "cmd_verify"]

logger = logging.getLogger(__name__)

LEVELS = ("fast", "full")


class Caps(typing.NamedTuple):
    degree: int
    oracle: int
    seed: int


class Property(typing.NamedTuple):
    name: str
    level: str
    check: typing.Callable[[int, Caps], bool]


class Outcome(typing.NamedTuple):
    name: str
    passed: bool


registry: typing.Dict[str, Property] = {}


def prop(name: str, level: str = "fast") -> typing.Callable:
    def decorator(func: typing.Callable[[int, Caps], bool]) -> typing.Callable[[int, Caps], bool]:
        registry[name] = Property(name, level, func)
        return func

    return decorator


def _tableaux(d: int, caps: Caps) -> typing.Iterator[StandardTableau]:
    for shape in partitions(d, caps.degree):
        yield from standard_tableaux(shape, caps.degree)


def _pairs(
    d: int, caps: Caps
) -> typing.Iterator[typing.Tuple[StandardTableau, StandardTableau]]:
    for shape in partitions(d, caps.degree):
        tableaux = standard_tableaux(shape, caps.degree)
        yield from itertools.product(tableaux, tableaux)


def _dimension(tableau: StandardTableau, caps: Caps) -> Fraction:
    """f_lambda / d!"""
    return Fraction(
        len(standard_tableaux(tableau.shape, caps.degree)), math.factorial(tableau.degree)
    )


@prop("dimensions")
def dimensions(d: int, caps: Caps) -> bool:
    return sum(
        len(standard_tableaux(s, caps.degree)) ** 2 for s in partitions(d, caps.degree)
    ) == math.factorial(d)


@prop("content vectors")
def content_vectors(d: int, caps: Caps) -> bool:
    for shape in partitions(d, caps.degree):
        tableaux = standard_tableaux(shape, caps.degree)
        if len({content_vector(t) for t in tableaux}) != len(tableaux):
            return False
    return True


@prop("coxeter involution")
def coxeter_involution(d: int, caps: Caps) -> bool:
    for tableau in _tableaux(d, caps):
        for i in range(1, d):
            action = apply_coxeter(tableau, i)
            if action.kind is ActionKind.STANDARD:
                back = apply_coxeter(typing.cast(StandardTableau, action.tableau), i)
                if back.tableau != tableau:
                    return False
    return True


@prop("sigma permutation")
def sigma_relabels(d: int, caps: Caps) -> bool:
    return all(
        s.relabel(sigma_permutation(s, t)) == t.rows
        and sigma_permutation(t, s) == sigma_permutation(s, t).inverse()
        for t, s in _pairs(d, caps)
    )


@prop("idempotents")
def idempotents(d: int, caps: Caps) -> bool:
    projections = [minimal_projection(t, caps.degree) for t in _tableaux(d, caps)]
    for a, e in enumerate(projections):
        if e * e != e or adjoint(e) != e:
            return False
        for b, f in enumerate(projections):
            if a != b and not (e * f).is_zero():
                return False
    return True


@prop("resolution of identity")
def resolution_of_identity(d: int, caps: Caps) -> bool:
    total = zero(d)
    for tableau in _tableaux(d, caps):
        total = total + minimal_projection(tableau, caps.degree)
    return total == identity(d)


@prop("jucys-murphy spectrum")
def jucys_murphy_spectrum(d: int, caps: Caps) -> bool:
    for tableau in _tableaux(d, caps):
        e = minimal_projection(tableau, caps.degree)
        contents = content_vector(tableau)
        for i in range(1, d + 1):
            if jucys_murphy(i, d) * e != e * contents[i - 1]:
                return False
    return True


@prop("projection trace")
def projection_trace(d: int, caps: Caps) -> bool:
    return all(
        regular_trace(minimal_projection(t, caps.degree)) == _dimension(t, caps)
        for t in _tableaux(d, caps)
    )


@prop("normalization constant")
def normalization_constant(d: int, caps: Caps) -> bool:
    for row, col in _pairs(d, caps):
        unit = matrix_unit_unnormalized(row, col, caps.degree)
        if unit.c_squared * inner(unit.element, unit.element) != _dimension(row, caps):
            return False
    return True


@prop("kernel")
def kernel(d: int, caps: Caps) -> bool:
    for shape in partitions(d, caps.degree):
        for unit in matrix_units(shape, caps.degree):
            norm = norm_polynomial(unit)
            if any(norm.evaluate(n) != 0 for n in range(1, shape.length)):
                return False
            if norm.evaluate(shape.length) <= 0:
                return False
    return True


@prop("one-row law")
def one_row_law(d: int, caps: Caps) -> bool:
    ones = (1,) * d
    for n in range(2, d + 3):
        for j in itertools.product(range(1, 3), repeat=d):
            for l in itertools.product(range(1, 3), repeat=d):
                query = MomentQuery(i=ones, j=j, k=ones, l=l, n=n)
                if one_row_moment(j, l, n, caps.degree) != moment(query, caps.degree):
                    return False
    return True


@prop("symbolic agreement")
def symbolic_agreement(d: int, caps: Caps) -> bool:
    ascending = tuple(range(1, d + 1))
    queries = [
        MomentQuery(i=(1,) * d, j=(1,) * d, k=(1,) * d, l=(1,) * d),
        MomentQuery(i=ascending, j=ascending, k=ascending, l=ascending[::-1]),
    ]
    for query in queries:
        piecewise = moment_symbolic(query, caps.degree)
        for n in range(query.max_index, d + 4):
            if piecewise.evaluate(n) != moment(query.at(n), caps.degree):
                return False
    return True


@prop("path independence", "full")
def path_independence(d: int, caps: Caps) -> bool:
    for row, col in _pairs(d, caps):
        values = {c_squared_along(row, path) for path in minimal_admissible_paths(row, col)}
        if len(values) != 1:
            return False
    return True


@prop("unit algebra", "full")
def unit_algebra(d: int, caps: Caps) -> bool:
    for shape in partitions(d, caps.degree):
        units = {(u.row, u.col): u for u in matrix_units(shape, caps.degree)}
        for (t, s), first in units.items():
            for (r, m), second in units.items():
                product = first.element * second.element
                if s != r:
                    if not product.is_zero():
                        return False
                elif not proportionality(product, units[(t, m)].element):
                    return False
    return True


@prop("trace orthogonality", "full")
def trace_orthogonality(d: int, caps: Caps) -> bool:
    units = [u for s in partitions(d, caps.degree) for u in matrix_units(s, caps.degree)]
    for a, first in enumerate(units):
        for second in units[a + 1:]:
            if inner(first.element, second.element) != 0:
                return False
    return True


@prop("branching", "full")
def branching(d: int, caps: Caps) -> bool:
    if d < 2:
        return True
    for tableau in _tableaux(d - 1, caps):
        lifted = embed(minimal_projection(tableau, caps.degree), d)
        children = zero(d)
        for child in extensions(tableau):
            children = children + minimal_projection(child, caps.degree)
        if lifted != children:
            return False
    return all(
        lemma_coefficients(row, col, caps.degree).holds for row, col in _pairs(d - 1, caps)
    )


@prop("conditional expectation", "full")
def conditional_expectations(d: int, caps: Caps) -> bool:
    if d < 2:
        return True
    for row, col in _pairs(d - 1, caps):
        element = matrix_unit_unnormalized(row, col, caps.degree).element
        if conditional_expectation(embed(element, d)) != element:
            return False
    for row, col in _pairs(d, caps):
        report = conditional_expectation_constant(row, col, caps.degree)
        if not report.proportional:
            return False
        logger.info(f"E({row}, {col}): constant {report.constant}, matches {report.matches}")
    return True


@prop("oracle equivalence", "full")
def oracle_equivalence(d: int, caps: Caps) -> bool:
    if d > caps.oracle:
        logger.info(f"oracle equivalence skipped above degree {caps.oracle}")
        return True
    rng = np.random.default_rng(caps.seed + d)
    for n in range(d, d + 2):
        for _ in range(20):
            i, j, k, l = (
                tuple(int(v) for v in rng.integers(1, n + 1, size=d)) for _ in range(4)
            )
            query = MomentQuery(i=i, j=j, k=k, l=l, n=n)
            if moment(query, caps.degree) != wg_moment(query, caps.oracle):
                return False
    return True


def run(
    d: int,
    level: str = "fast",
    cap: typing.Optional[int] = None,
    oracle_cap: typing.Optional[int] = None,
) -> typing.List[Outcome]:
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}, got {level!r}.")
    config = Config()
    caps = Caps(
        config.DEGREE_CAP if cap is None else cap,
        config.ORACLE_CAP if oracle_cap is None else oracle_cap,
        config.SEED,
    )
    check_degree(d, caps.degree)
    outcomes = []
    for entry in registry.values():
        if level == "fast" and entry.level != "fast":
            continue
        passed = bool(entry.check(d, caps))
        logger.info(f"{entry.name}: {'pass' if passed else 'FAIL'}")
        outcomes.append(Outcome(entry.name, passed))
    return outcomes


@click.option("--d", "degree", type=int, required=True, help="degree to check")
@click.option("--level", type=click.Choice(LEVELS), default="fast", show_default=True)
@click.pass_obj
def cmd_verify(obj: typing.Optional[CliConfig], degree: int, level: str) -> None:
    settings = obj or CliConfig.from_config(Config())
    outcomes = run(degree, level, settings.degree_cap, settings.oracle_cap)
    passed = all(outcome.passed for outcome in outcomes)
    payload = {
        "degree": degree,
        "level": level,
        "outcomes": [outcome._asdict() for outcome in outcomes],
        "passed": passed,
    }
    text = "\n".join(
        f"{'PASS' if outcome.passed else 'FAIL'}  {outcome.name}" for outcome in outcomes
    )
    click.echo(render(payload, settings.output, text))
    if not passed:
        raise SystemExit(1)
