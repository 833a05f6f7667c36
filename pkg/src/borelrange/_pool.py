from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> Iterator[R]:
    """map() that fans out over ``jobs`` processes; results keep input order."""
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        yield from map(fn, items)
        return
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        yield from ex.map(fn, items, chunksize=max(1, len(items) // (4 * jobs)))
