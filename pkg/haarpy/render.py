import json
import math
import typing
import functools
from fractions import Fraction

import yaml

from .config import OUTPUT_FORMATS
from .group_algebra import AlgebraElement, MatrixUnitRecord
from .haar import PiecewiseMomentInN
from .models import Model
from .polynomials import PolynomialInN, RationalFunctionInN
from .tableaux import Permutation, StandardTableau, YoungDiagram

__all__ = ["jsonable", "render"]


@functools.singledispatch
def jsonable(value: typing.Any) -> typing.Any:
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    raise TypeError(f"Cannot find jsonable handler for this type: {type(value)}")


@jsonable.register(float)
def _float(value: float) -> typing.Union[float, str]:
    # JSON has no infinity or NaN
    if math.isfinite(value):
        return value
    return str(value)


@jsonable.register(Fraction)
def _fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


@jsonable.register(Permutation)
def _permutation(value: Permutation) -> typing.List[int]:
    return list(value)


@jsonable.register(YoungDiagram)
def _diagram(value: YoungDiagram) -> typing.List[int]:
    return list(value.rows)


@jsonable.register(StandardTableau)
def _tableau(value: StandardTableau) -> typing.Dict[str, typing.Any]:
    return {"shape": list(value.shape.rows), "rows": [list(row) for row in value.rows]}


@jsonable.register(AlgebraElement)
def _element(value: AlgebraElement) -> typing.Dict[str, typing.Any]:
    return {
        "degree": value.degree,
        "terms": [
            {"perm": list(p), "coeff": jsonable(c)} for p, c in value.items()
        ],
    }


@jsonable.register(PolynomialInN)
def _polynomial(value: PolynomialInN) -> typing.Dict[str, typing.Any]:
    return {"coeffs": [jsonable(c) for c in value.coeffs]}


@jsonable.register(RationalFunctionInN)
def _rational_function(value: RationalFunctionInN) -> typing.Dict[str, typing.Any]:
    return {
        "num": [jsonable(c) for c in value.numerator.coeffs],
        "den": [jsonable(c) for c in value.denominator.coeffs],
    }


@jsonable.register(MatrixUnitRecord)
def _unit(value: MatrixUnitRecord) -> typing.Dict[str, typing.Any]:
    return {
        "shape": jsonable(value.shape),
        "row": jsonable(value.row),
        "col": jsonable(value.col),
        "element": jsonable(value.element),
        "c_squared": jsonable(value.c_squared),
    }


@jsonable.register(PiecewiseMomentInN)
def _piecewise(value: PiecewiseMomentInN) -> typing.Dict[str, typing.Any]:
    return {
        "branches": [
            {"min_n": branch.min_n, **jsonable(branch.function)}
            for branch in value.branches
        ]
    }


@jsonable.register(Model)
def _model(value: Model) -> typing.Any:
    return jsonable(value.dict())


@jsonable.register(dict)
def _dict(value: dict) -> typing.Dict[str, typing.Any]:
    return {str(k): jsonable(v) for k, v in value.items()}


@jsonable.register(list)
@jsonable.register(tuple)
def _sequence(value: typing.Sequence) -> typing.List[typing.Any]:
    return [jsonable(item) for item in value]


def render(
    payload: typing.Any, output: str = "text", text: typing.Optional[str] = None
) -> str:
    """
    `payload` as JSON or YAML; for text output `text` is used when given,
    else the YAML form
    """
    if output not in OUTPUT_FORMATS:
        raise ValueError(f"output must be one of {OUTPUT_FORMATS}, got {output!r}.")
    if output == "text" and text is not None:
        return text
    data = jsonable(payload)
    if output == "json":
        return json.dumps(data, ensure_ascii=False, allow_nan=False)
    return yaml.safe_dump(data, allow_unicode=True, sort_keys=False).rstrip("\n")
