"""
Young diagrams, standard tableaux and permutations of S_d.

Conventions: English orientation, 0-based (row, col) boxes, content = col - row,
so the box holding 1 always has content 0. Permutations act on fillings
pointwise: (pi T)(box) = pi(T(box)).
"""
import enum
import typing
import logging
import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .config import Config
from .exceptions import (
    CapacityError,
    IndexRangeError,
    InvalidPartitionError,
    ShapeMismatchError,
)
from .types import Box, Rows

__all__ = [
    "Permutation",
    "YoungDiagram",
    "StandardTableau",
    "ContentVector",
    "ActionKind",
    "CoxeterAction",
    "check_degree",
    "all_permutations",
    "partitions",
    "standard_tableaux",
    "content_vector",
    "axial_distance",
    "apply_coxeter",
    "admissible_path",
    "minimal_admissible_paths",
    "coxeter_distance",
    "sigma_permutation",
    "removal",
    "extensions",
]

logger = logging.getLogger(__name__)


def check_degree(d: int, cap: typing.Optional[int] = None) -> int:
    if cap is None:
        cap = Config().DEGREE_CAP
    if d < 1:
        raise InvalidPartitionError(f"degree must be positive, got {d}.")
    if d > cap:
        raise CapacityError("degree", d, cap)
    return d


class Permutation(tuple):
    """
    A bijection of {1..d} in one-line notation: `p[i - 1] == p(i)`.

    Products compose right to left, `(p * q)(i) == p(q(i))`, which is the
    multiplication of the group algebra.
    """

    def __new__(cls, images: typing.Iterable[int]) -> "Permutation":
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}.")
        return super().__new__(cls, images)

    @classmethod
    def _trusted(cls, images: typing.Iterable[int]) -> "Permutation":
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls._trusted(range(1, d + 1))

    @classmethod
    def transposition(cls, d: int, a: int, b: int) -> "Permutation":
        if not (1 <= a <= d and 1 <= b <= d) or a == b:
            raise IndexRangeError(f"cannot build transposition ({a} {b}) in S_{d}.")
        images = list(range(1, d + 1))
        images[a - 1], images[b - 1] = b, a
        return cls._trusted(images)

    @classmethod
    def coxeter(cls, d: int, i: int) -> "Permutation":
        return cls.transposition(d, i, i + 1)

    @classmethod
    def from_cycles(cls, d: int, *cycles: typing.Sequence[int]) -> "Permutation":
        images = list(range(1, d + 1))
        for cycle in cycles:
            for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
                images[a - 1] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":  # type: ignore
        if len(self) != len(other):
            raise ValueError("cannot compose permutations of different degrees.")
        return Permutation._trusted(self[t - 1] for t in other)

    def inverse(self) -> "Permutation":
        images = [0] * len(self)
        for i, image in enumerate(self, 1):
            images[image - 1] = i
        return Permutation._trusted(images)

    def is_identity(self) -> bool:
        return all(image == i for i, image in enumerate(self, 1))

    def fixes(self, i: int) -> bool:
        return self[i - 1] == i

    def extend(self, degree: int) -> "Permutation":
        """view as a permutation of `degree` points fixing the new ones"""
        return Permutation._trusted(self + tuple(range(len(self) + 1, degree + 1)))

    def restrict(self) -> "Permutation":
        """drop the last point, which must be fixed"""
        if not self.fixes(len(self)):
            raise ValueError(f"{self.cycle_notation()} moves {len(self)}.")
        return Permutation._trusted(self[:-1])

    def cycles(self) -> typing.List[typing.Tuple[int, ...]]:
        seen = set()
        result = []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            image = self[start - 1]
            while image != start:
                cycle.append(image)
                seen.add(image)
                image = self[image - 1]
            result.append(tuple(cycle))
        return result

    def cycle_count(self) -> int:
        """number of cycles, fixed points included"""
        return len(self.cycles())

    def coxeter_word(self) -> typing.List[int]:
        """
        a reduced word i_1, ..., i_k with self == s_{i_1} * ... * s_{i_k}
        """
        images = list(self)
        word: typing.List[int] = []
        # right-multiplying by s_i swaps positions i, i+1 of the one-line form
        changed = True
        while changed:
            changed = False
            for i in range(len(images) - 1):
                if images[i] > images[i + 1]:
                    images[i], images[i + 1] = images[i + 1], images[i]
                    word.append(i + 1)
                    changed = True
        word.reverse()
        return word

    def cycle_notation(self) -> str:
        moved = [cycle for cycle in self.cycles() if len(cycle) > 1]
        if not moved:
            return "e"
        return "".join("(" + " ".join(map(str, cycle)) + ")" for cycle in moved)

    def __repr__(self) -> str:
        return f"Permutation({list(self)})"


@lru_cache(maxsize=None)
def all_permutations(d: int) -> typing.Tuple[Permutation, ...]:
    """S_d in lexicographic order of the one-line notation, identity first"""
    return tuple(
        Permutation._trusted(images)
        for images in itertools.permutations(range(1, d + 1))
    )


@dataclass(frozen=True)
class YoungDiagram:
    rows: typing.Tuple[int, ...]

    def __post_init__(self) -> None:
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise InvalidPartitionError("a Young diagram needs at least one row.")
        if any(not isinstance(row, int) or row < 1 for row in rows):
            raise InvalidPartitionError(f"rows must be positive integers, got {rows}.")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise InvalidPartitionError(f"rows must be non-increasing, got {rows}.")

    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def length(self) -> int:
        return len(self.rows)

    def boxes(self) -> typing.Iterator[Box]:
        for r, width in enumerate(self.rows):
            for c in range(width):
                yield (r, c)

    def addable(self) -> typing.List[Box]:
        """cells that can be added, top to bottom"""
        cells = [(0, self.rows[0])]
        for r in range(1, self.length):
            if self.rows[r] < self.rows[r - 1]:
                cells.append((r, self.rows[r]))
        cells.append((self.length, 0))
        return cells

    def removable(self) -> typing.List[Box]:
        cells = []
        for r, width in enumerate(self.rows):
            if r + 1 == self.length or self.rows[r + 1] < width:
                cells.append((r, width - 1))
        return cells

    def add(self, cell: Box) -> "YoungDiagram":
        r, _ = cell
        rows = list(self.rows) + [0]
        rows[r] += 1
        return YoungDiagram(tuple(row for row in rows if row))

    def remove(self, cell: Box) -> typing.Optional["YoungDiagram"]:
        r, _ = cell
        rows = list(self.rows)
        rows[r] -= 1
        rows = [row for row in rows if row]
        return YoungDiagram(tuple(rows)) if rows else None

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.rows)) + ")"


ContentVector = typing.Tuple[int, ...]


def content(box: Box) -> int:
    r, c = box
    return c - r


@dataclass(frozen=True)
class StandardTableau:
    shape: YoungDiagram
    rows: Rows

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if tuple(len(row) for row in rows) != self.shape.rows:
            raise ShapeMismatchError(f"rows {rows} do not fill shape {self.shape}.")
        entries = sorted(entry for row in rows for entry in row)
        if entries != list(range(1, self.shape.size + 1)):
            raise ValueError(f"{rows} is not a filling with 1..{self.shape.size}.")
        for r, row in enumerate(rows):
            for c, entry in enumerate(row):
                if c > 0 and row[c - 1] >= entry:
                    raise ValueError(f"{rows} is not increasing along row {r + 1}.")
                if r > 0 and rows[r - 1][c] >= entry:
                    raise ValueError(f"{rows} is not increasing along column {c + 1}.")

    @classmethod
    def from_rows(cls, rows: typing.Sequence[typing.Sequence[int]]) -> "StandardTableau":
        return cls(YoungDiagram(tuple(len(row) for row in rows)), rows)  # type: ignore

    @property
    def degree(self) -> int:
        return self.shape.size

    @property
    def positions(self) -> typing.Dict[int, Box]:
        return {
            entry: (r, c) for r, row in enumerate(self.rows) for c, entry in enumerate(row)
        }

    def box_of(self, entry: int) -> Box:
        for r, row in enumerate(self.rows):
            if entry in row:
                return (r, row.index(entry))
        raise IndexRangeError(f"{entry} does not appear in {self.rows}.")

    def growth(self) -> typing.List[YoungDiagram]:
        """the path lambda_1 -> ... -> lambda_d in the Young graph"""
        positions = self.positions
        rows: typing.List[int] = []
        path = []
        for entry in range(1, self.degree + 1):
            r, _ = positions[entry]
            if r == len(rows):
                rows.append(0)
            rows[r] += 1
            path.append(YoungDiagram(tuple(rows)))
        return path

    def relabel(self, permutation: Permutation) -> typing.Tuple[typing.Tuple[int, ...], ...]:
        """the filling `permutation * self`, which need not be standard"""
        return tuple(tuple(permutation(entry) for entry in row) for row in self.rows)

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(map(str, row)) + "]" for row in self.rows) + "]"


def partitions(d: int, cap: typing.Optional[int] = None) -> typing.List[YoungDiagram]:
    """all partitions of d in decreasing lexicographic order"""
    check_degree(d, cap)
    return list(_partitions(d))


@lru_cache(maxsize=None)
def _partitions(d: int) -> typing.Tuple[YoungDiagram, ...]:
    def build(remaining: int, largest: int) -> typing.Iterator[typing.Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in build(remaining - first, first):
                yield (first,) + rest

    return tuple(YoungDiagram(rows) for rows in build(d, d))


def standard_tableaux(
    shape: YoungDiagram, cap: typing.Optional[int] = None
) -> typing.Tuple[StandardTableau, ...]:
    """
    every standard filling of `shape`, ordered by decreasing content vector
    """
    check_degree(shape.size, cap)
    return _standard_tableaux(shape)


@lru_cache(maxsize=None)
def _standard_tableaux(shape: YoungDiagram) -> typing.Tuple[StandardTableau, ...]:
    d = shape.size
    fillings: typing.List[typing.List[typing.List[int]]] = []

    def grow(rows: typing.List[typing.List[int]], entry: int) -> None:
        if entry > d:
            fillings.append([list(row) for row in rows])
            return
        for r, target in enumerate(shape.rows):
            if r > len(rows):
                break
            width = len(rows[r]) if r < len(rows) else 0
            if width == target or (r > 0 and width >= len(rows[r - 1])):
                continue
            if r == len(rows):
                rows.append([])
            rows[r].append(entry)
            grow(rows, entry + 1)
            rows[r].pop()
            if not rows[r]:
                rows.pop()

    grow([], 1)
    tableaux = [StandardTableau(shape, tuple(map(tuple, rows))) for rows in fillings]
    tableaux.sort(key=content_vector, reverse=True)
    logger.debug(f"enumerated {len(tableaux)} standard tableaux of shape {shape}")
    return tuple(tableaux)


def content_vector(tableau: StandardTableau) -> ContentVector:
    positions = tableau.positions
    return tuple(content(positions[i]) for i in range(1, tableau.degree + 1))


def _check_coxeter_index(tableau: StandardTableau, i: int) -> None:
    if not 1 <= i <= tableau.degree - 1:
        raise IndexRangeError(
            f"Coxeter index {i} out of range 1..{tableau.degree - 1}."
        )


def axial_distance(tableau: StandardTableau, i: int) -> int:
    """r_i(T) = a_{i+1}(T) - a_i(T)"""
    _check_coxeter_index(tableau, i)
    return content(tableau.box_of(i + 1)) - content(tableau.box_of(i))


class ActionKind(enum.Enum):
    SAME_ROW = "same_row"
    SAME_COLUMN = "same_column"
    STANDARD = "standard"


class CoxeterAction(typing.NamedTuple):
    kind: ActionKind
    tableau: typing.Optional[StandardTableau] = None


def apply_coxeter(tableau: StandardTableau, i: int) -> CoxeterAction:
    _check_coxeter_index(tableau, i)
    (r1, c1), (r2, c2) = tableau.box_of(i), tableau.box_of(i + 1)
    # i+1 right after i in a row, or right below it in a column
    if r1 == r2:
        return CoxeterAction(ActionKind.SAME_ROW)
    if c1 == c2:
        return CoxeterAction(ActionKind.SAME_COLUMN)
    rows = tableau.relabel(Permutation.coxeter(tableau.degree, i))
    return CoxeterAction(ActionKind.STANDARD, StandardTableau(tableau.shape, rows))


def _neighbours(
    tableau: StandardTableau,
) -> typing.Iterator[typing.Tuple[int, StandardTableau]]:
    for i in range(1, tableau.degree):
        action = apply_coxeter(tableau, i)
        if action.kind is ActionKind.STANDARD:
            yield i, typing.cast(StandardTableau, action.tableau)


def _check_same_shape(first: StandardTableau, second: StandardTableau) -> None:
    if first.shape != second.shape:
        raise ShapeMismatchError(
            f"tableaux have different shapes {first.shape} and {second.shape}."
        )


@lru_cache(maxsize=4096)
def admissible_path(source: StandardTableau, target: StandardTableau) -> typing.Tuple[int, ...]:
    """
    shortest sequence of admissible Coxeter indices turning `source` into
    `target`; ties go to the lexicographically smallest sequence
    """
    _check_same_shape(source, target)
    parents: typing.Dict[StandardTableau, typing.Tuple[StandardTableau, int]] = {}
    seen = {source}
    queue = deque([source])
    while queue:
        current = queue.popleft()
        if current == target:
            break
        for i, neighbour in _neighbours(current):
            if neighbour not in seen:
                seen.add(neighbour)
                parents[neighbour] = (current, i)
                queue.append(neighbour)

    path: typing.List[int] = []
    current = target
    while current != source:
        current, i = parents[current]
        path.append(i)
    path.reverse()
    return tuple(path)


def coxeter_distance(source: StandardTableau, target: StandardTableau) -> int:
    return len(admissible_path(source, target))


def minimal_admissible_paths(
    source: StandardTableau, target: StandardTableau
) -> typing.List[typing.Tuple[int, ...]]:
    """every shortest admissible path, in lexicographic order"""
    _check_same_shape(source, target)
    distance: typing.Dict[StandardTableau, int] = {source: 0}
    queue = deque([source])
    while queue:
        current = queue.popleft()
        for _, neighbour in _neighbours(current):
            if neighbour not in distance:
                distance[neighbour] = distance[current] + 1
                queue.append(neighbour)

    def walk(current: StandardTableau) -> typing.Iterator[typing.Tuple[int, ...]]:
        if current == target:
            yield ()
            return
        if distance[current] >= distance[target]:
            return
        for i, neighbour in _neighbours(current):
            if distance[neighbour] == distance[current] + 1:
                for rest in walk(neighbour):
                    yield (i,) + rest

    return list(walk(source))


def sigma_permutation(source: StandardTableau, target: StandardTableau) -> Permutation:
    """the permutation pi with pi * source == target"""
    _check_same_shape(source, target)
    images = [0] * source.degree
    for source_row, target_row in zip(source.rows, target.rows):
        for a, b in zip(source_row, target_row):
            images[a - 1] = b
    return Permutation._trusted(images)


def removal(tableau: StandardTableau) -> typing.Optional[StandardTableau]:
    """T-bar: drop the box holding d; None for the single-box tableau"""
    d = tableau.degree
    if d == 1:
        return None
    rows = tuple(tuple(e for e in row if e != d) for row in tableau.rows)
    rows = tuple(row for row in rows if row)
    return StandardTableau(YoungDiagram(tuple(len(row) for row in rows)), rows)


def extensions(tableau: typing.Optional[StandardTableau]) -> typing.List[StandardTableau]:
    """every S with S-bar == tableau, ordered by the added cell top to bottom"""
    if tableau is None:
        return [StandardTableau(YoungDiagram((1,)), ((1,),))]
    d = tableau.degree + 1
    result = []
    for r, _ in tableau.shape.addable():
        rows = [list(row) for row in tableau.rows] + [[]]
        rows[r].append(d)
        filled = tuple(tuple(row) for row in rows if row)
        result.append(StandardTableau(tableau.shape.add((r, 0)), filled))
    return result
