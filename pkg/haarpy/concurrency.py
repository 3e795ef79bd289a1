import typing
from concurrent.futures import ThreadPoolExecutor

__all__ = ["parallel_map"]

T = typing.TypeVar("T")
R = typing.TypeVar("R")


def parallel_map(
    func: typing.Callable[[T], R], items: typing.Iterable[T], workers: int = 1
) -> typing.List[R]:
    """
    map `func` over `items`, results in input order.

    workers == 1 runs in the calling thread; anything larger uses a thread
    pool. Either way the result list is the same, so callers can merge it
    deterministically.
    """
    items = list(items)
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}.")
    if workers == 1 or len(items) < 2:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(workers, len(items))) as executor:
        return list(executor.map(func, items))
