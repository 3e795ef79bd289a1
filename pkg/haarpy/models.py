import math
import typing

from pydantic import BaseModel as Model
from pydantic import Field, PositiveInt, root_validator, validator

from .config import LOG_LEVELS, OUTPUT_FORMATS, Config

__all__ = ["Model", "Field", "MomentQuery", "CliConfig", "MomentEstimate"]

IndexTuple = typing.Tuple[PositiveInt, ...]


class MomentQuery(Model):
    """
    The integral of u_{i1 j1} ... u_{id jd} conj(u_{k1 l1}) ... conj(u_{kd ld})
    over U_n. `n` is None for a query answered symbolically in n.
    """

    i: IndexTuple
    j: IndexTuple
    k: IndexTuple
    l: IndexTuple
    n: typing.Optional[PositiveInt] = None

    class Config:
        frozen = True

    @validator("i", "j", "k", "l")
    def not_empty(cls, value: typing.Tuple[int, ...]) -> typing.Tuple[int, ...]:
        if not value:
            raise ValueError("index tuples must not be empty")
        return value

    @root_validator(skip_on_failure=True)
    def consistent(cls, values: typing.Dict[str, typing.Any]) -> typing.Dict[str, typing.Any]:
        lengths = {len(values[name]) for name in "ijkl"}
        if len(lengths) != 1:
            raise ValueError("i, j, k and l must have the same length")
        n = values.get("n")
        if n is not None:
            largest = max(max(values[name]) for name in "ijkl")
            if largest > n:
                raise ValueError(f"index {largest} exceeds n = {n}")
        return values

    @property
    def degree(self) -> int:
        return len(self.i)

    @property
    def max_index(self) -> int:
        return max(max(self.i), max(self.j), max(self.k), max(self.l))

    def at(self, n: typing.Optional[int]) -> "MomentQuery":
        return MomentQuery(i=self.i, j=self.j, k=self.k, l=self.l, n=n)

    def monomial(self) -> str:
        first = "".join(f"u{a},{b} " for a, b in zip(self.i, self.j))
        second = " ".join(f"ū{a},{b}" for a, b in zip(self.k, self.l))
        return first + second


class CliConfig(Model):
    degree_cap: PositiveInt = 6
    oracle_cap: PositiveInt = 5
    output: str = "text"
    log_level: str = "warning"
    seed: int = 20100
    samples: PositiveInt = 100000
    mc_streams: PositiveInt = 8
    workers: PositiveInt = 1

    @validator("output")
    def known_output(cls, value: str) -> str:
        if value not in OUTPUT_FORMATS:
            raise ValueError(f"output must be one of {OUTPUT_FORMATS}")
        return value

    @validator("log_level")
    def known_level(cls, value: str) -> str:
        if value not in LOG_LEVELS:
            raise ValueError(f"log level must be one of {tuple(LOG_LEVELS)}")
        return value

    @classmethod
    def from_config(cls, config: Config, **overrides: typing.Any) -> "CliConfig":
        """config values, replaced by every override that is not None"""
        values = {
            name: config.get(name.upper())
            for name in cls.__fields__
            if config.get(name.upper()) is not None
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


class MomentEstimate(Model):
    mean_re: float
    mean_im: float
    stderr: float = Field(..., ge=0)
    samples: PositiveInt
    seed: int

    @property
    def mean(self) -> complex:
        return complex(self.mean_re, self.mean_im)

    def agrees_with(self, value: typing.Any, sigmas: float = 5.0, floor: float = 1e-9) -> bool:
        """|mean - value| within `sigmas` standard errors, never tighter than `floor`"""
        if math.isinf(self.stderr):
            return True
        return abs(self.mean - complex(value)) <= max(sigmas * self.stderr, floor)
