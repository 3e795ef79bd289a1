import os
import sys
import typing
import logging
import functools

import click
from pydantic import ValidationError

from .config import LOG_LEVELS, OUTPUT_FORMATS, Config, ConfigError
from .exceptions import HaarError, IndexRangeError
from .group_algebra import matrix_unit_unnormalized
from .haar import moment, moment_symbolic, norm_polynomial
from .models import CliConfig, MomentQuery
from .monte_carlo import mc_moment
from .render import jsonable, render
from .tableaux import YoungDiagram, content_vector, partitions, standard_tableaux
from .utils import import_module
from .verify import cmd_verify
from .weingarten import wg_moment
from .__version__ import __version__

config = Config()

METHODS = ("units", "weingarten", "mc", "all")


class IndexTuple(click.ParamType):
    """comma separated integers, like `1,2,2`"""

    name = "tuple"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            return tuple(int(part) for part in value.split(","))
        except ValueError:
            self.fail(f"{value!r} is not a comma separated list of integers", param, ctx)


INDEX_TUPLE = IndexTuple()


def exit_on_error(func: typing.Callable) -> typing.Callable:
    """report library and validation errors on stderr, exit with code 2"""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (HaarError, ConfigError, ValidationError) as exception:
            click.secho(f"error: {exception}", fg="red", err=True)
            sys.exit(2)

    return wrapper


class EchoHandler(logging.Handler):
    """write records through click, so they follow whatever stderr is current"""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            click.echo(self.format(record), err=True)
        except Exception:
            self.handleError(record)


def setup_logging(level: str) -> None:
    logger = logging.getLogger("haarpy")
    logger.setLevel(LOG_LEVELS[level])
    if not any(isinstance(handler, EchoHandler) for handler in logger.handlers):
        handler = EchoHandler()
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        logger.addHandler(handler)


@click.group(help=f"haar.py {__version__}")
@click.option("--env", default=None, help="set config.ENV")
@click.option("--output", type=click.Choice(OUTPUT_FORMATS), default=None)
@click.option("--degree-cap", type=int, default=None)
@click.option("--oracle-cap", type=int, default=None)
@click.option("--log-level", type=click.Choice(tuple(LOG_LEVELS)), default=None)
@click.pass_context
@exit_on_error
def main(ctx, env, output, degree_cap, oracle_cap, log_level):
    if env is not None:
        os.environ["HAAR_ENV"] = env
        config.import_from_environ()
    settings = CliConfig.from_config(
        config,
        output=output,
        degree_cap=degree_cap,
        oracle_cap=oracle_cap,
        log_level=log_level,
    )
    setup_logging(settings.log_level)
    ctx.obj = settings


def _estimate_text(estimate) -> str:
    return f"{estimate.mean_re:.6f}{estimate.mean_im:+.6f}i ± {estimate.stderr:.6f}"


@main.command(name="moment", help="integrate a monomial in the entries of a Haar unitary")
@click.option("--i", "i", type=INDEX_TUPLE, required=True)
@click.option("--j", "j", type=INDEX_TUPLE, required=True)
@click.option("--k", "k", type=INDEX_TUPLE, required=True)
@click.option("--l", "l", type=INDEX_TUPLE, required=True)
@click.option("--n", "n", type=int, default=None, help="dimension of U_n")
@click.option("--symbolic", is_flag=True, default=False, help="answer as a function of n")
@click.option("--method", type=click.Choice(METHODS), default="units", show_default=True)
@click.option("--samples", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.pass_obj
@exit_on_error
def cmd_moment(settings: CliConfig, i, j, k, l, n, symbolic, method, samples, seed):
    if n is None and not symbolic:
        raise click.UsageError("give --n, or --symbolic for an answer in n.")
    if symbolic and method != "units":
        raise click.UsageError(f"--symbolic gives no answer for --method {method}, only for units.")
    query = MomentQuery(i=i, j=j, k=k, l=l, n=None if symbolic else n)

    if symbolic:
        piecewise = moment_symbolic(query, settings.degree_cap)
        lines = []
        for branch in piecewise.branches:
            where = f"n >= {branch.min_n}" if branch.max_n is None else f"n = {branch.min_n}"
            lines.append(f"{where}: {branch.function}")
        click.echo(render(piecewise, settings.output, "\n".join(lines)))
        return

    overrides = {"samples": samples, "seed": seed}
    settings = CliConfig(
        **{**settings.dict(), **{k: v for k, v in overrides.items() if v is not None}}
    )
    if method == "units":
        value = moment(query, settings.degree_cap)
        click.echo(render({"moment": value}, settings.output, str(value)))
    elif method == "weingarten":
        value = wg_moment(query, settings.oracle_cap)
        click.echo(render({"moment": value}, settings.output, str(value)))
    elif method == "mc":
        estimate = mc_moment(
            query, settings.samples, settings.seed, settings.mc_streams, settings.workers
        )
        click.echo(render(estimate, settings.output, _estimate_text(estimate)))
    else:
        compare_methods(settings, query)


def compare_methods(settings: CliConfig, query: MomentQuery) -> None:
    exact = moment(query, settings.degree_cap)
    oracle = None
    if query.n >= query.degree and query.degree <= settings.oracle_cap:
        oracle = wg_moment(query, settings.oracle_cap)
    estimate = mc_moment(
        query, settings.samples, settings.seed, settings.mc_streams, settings.workers
    )
    agree = oracle is None or oracle == exact
    report = {
        "units": exact,
        "weingarten": oracle,
        "mc": estimate,
        "mc_within_error": estimate.agrees_with(exact),
        "agree": agree,
    }
    text = "\n".join(
        [
            f"units: {exact}",
            f"weingarten: {'skipped' if oracle is None else oracle}",
            f"mc: {_estimate_text(estimate)}",
            f"verdict: {'agree' if agree else 'disagree'}",
        ]
    )
    click.echo(render(report, settings.output, text))
    if not agree:
        sys.exit(1)


@main.command(name="tableaux", help="list Young diagrams and standard tableaux")
@click.option("--d", "degree", type=int, default=None, help="every diagram of this size")
@click.option("--lambda", "rows", type=INDEX_TUPLE, default=None, help="one diagram, like 2,1")
@click.pass_obj
@exit_on_error
def cmd_tableaux(settings: CliConfig, degree, rows):
    if (degree is None) == (rows is None):
        raise click.UsageError("give exactly one of --d and --lambda.")
    if rows is not None:
        shapes = [YoungDiagram(rows)]
    else:
        shapes = partitions(degree, settings.degree_cap)

    listing, lines = [], []
    for shape in shapes:
        tableaux = standard_tableaux(shape, settings.degree_cap)
        lines.append(f"{shape}  f={len(tableaux)}")
        entries = []
        for tableau in tableaux:
            contents = content_vector(tableau)
            lines.append(f"  {tableau}  ({','.join(map(str, contents))})")
            entries.append({**jsonable(tableau), "content": list(contents)})
        listing.append({"shape": list(shape.rows), "dimension": len(tableaux), "tableaux": entries})
    total = sum(item["dimension"] ** 2 for item in listing)
    if rows is None:
        lines.append(f"sum of f^2 = {total}")
    click.echo(render({"shapes": listing, "sum_of_squares": total}, settings.output, "\n".join(lines)))


@main.command(name="unit", help="show the unnormalized matrix unit of two tableaux")
@click.option("--lambda", "rows", type=INDEX_TUPLE, required=True)
@click.option("--row", "row", type=int, default=1, show_default=True, help="1-based tableau index")
@click.option("--col", "col", type=int, default=1, show_default=True, help="1-based tableau index")
@click.pass_obj
@exit_on_error
def cmd_unit(settings: CliConfig, rows, row, col):
    shape = YoungDiagram(rows)
    tableaux = standard_tableaux(shape, settings.degree_cap)
    for value in (row, col):
        if not 1 <= value <= len(tableaux):
            raise IndexRangeError(f"tableau index {value} out of range 1..{len(tableaux)}.")
    unit = matrix_unit_unnormalized(tableaux[row - 1], tableaux[col - 1], settings.degree_cap)
    norm = norm_polynomial(unit)
    text = "\n".join(
        [
            f"shape: {unit.shape}",
            f"row: {unit.row}",
            f"col: {unit.col}",
            f"element: {unit.element}",
            f"c^2: {unit.c_squared}",
            f"norm: {norm}",
        ]
    )
    click.echo(render({**jsonable(unit), "norm": norm}, settings.output, text))


main.command(name="verify", help="check algebraic identities at one degree")(
    exit_on_error(cmd_verify)
)

import_module("commands")
