__all__ = [
    "HaarError",
    "CapacityError",
    "ShapeMismatchError",
    "DegreeMismatchError",
    "IndexRangeError",
    "InvalidPartitionError",
    "SingularGramError",
]


class HaarError(Exception):
    pass


class CapacityError(HaarError, ValueError):
    def __init__(self, what: str, value: int, cap: int) -> None:
        self.what = what
        self.value = value
        self.cap = cap
        super().__init__(f"{what} {value} exceeds the configured cap {cap}.")


class ShapeMismatchError(HaarError, ValueError):
    pass


class DegreeMismatchError(HaarError, ValueError):
    pass


class IndexRangeError(HaarError, ValueError):
    pass


class InvalidPartitionError(HaarError, ValueError):
    pass


class SingularGramError(HaarError, ValueError):
    """
    The Gram matrix may be singular for n < d; the pseudo-inverse is not provided.
    """
