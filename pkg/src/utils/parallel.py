"""Process pool helpers for census workloads"""

import concurrent.futures
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, TypeVar

from tqdm import tqdm

T = TypeVar("T")
R = TypeVar("R")


class WorkerPool:
    """
    Context manager around a ProcessPoolExecutor.

    With workers <= 1 no processes are started and map() runs in-process,
    so callers can share in-memory state such as a memo.
    """

    def __init__(self, workers: int = 1, initializer: Optional[Callable] = None, initargs: Sequence = ()):
        self.workers = max(1, int(workers))
        self.initializer = initializer
        self.initargs = tuple(initargs)
        self._executor: Optional[concurrent.futures.ProcessPoolExecutor] = None

    @property
    def is_parallel(self) -> bool:
        return self.workers > 1

    def __enter__(self) -> "WorkerPool":
        if self.is_parallel:
            self._executor = concurrent.futures.ProcessPoolExecutor(
                max_workers=self.workers,
                initializer=self.initializer,
                initargs=self.initargs,
            )
        return self

    def __exit__(self, exc_type, exc, tb) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=exc_type is None, cancel_futures=exc_type is not None)
            self._executor = None

    def map(self, func: Callable[[T], R], items: Sequence[T]) -> List[R]:
        """Apply func to every item, results in input order."""
        if self._executor is None:
            return [func(item) for item in items]
        chunksize = max(1, len(items) // (4 * self.workers))
        return list(self._executor.map(func, items, chunksize=chunksize))


def split_range(start: int, stop: int, parts: int) -> List[range]:
    """Split [start, stop) into at most parts contiguous, nearly equal ranges."""
    total = stop - start
    parts = max(1, min(parts, total)) if total > 0 else 1
    step, extra = divmod(total, parts)
    ranges = []
    low = start
    for i in range(parts):
        high = low + step + (1 if i < extra else 0)
        ranges.append(range(low, high))
        low = high
    return ranges


def batched(items: Iterable[T], size: int) -> Iterator[List[T]]:
    batch: List[T] = []
    for item in items:
        batch.append(item)
        if len(batch) >= size:
            yield batch
            batch = []
    if batch:
        yield batch


def progress(items: Iterable[T], enabled: bool, desc: str, total: Optional[int] = None) -> Iterable[T]:
    """Wrap an iterable in a tqdm bar when enabled."""
    if not enabled:
        return items
    return tqdm(items, desc=desc, total=total, dynamic_ncols=True, ascii=True, leave=False)
