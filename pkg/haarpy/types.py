from typing import Tuple

Indices = Tuple[int, ...]
Rows = Tuple[Tuple[int, ...], ...]
Box = Tuple[int, int]
