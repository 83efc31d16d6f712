"""Order-preserving fan-out over a thread or process pool"""

import logging
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Iterable[T], max_workers: int = 1,
                processes: bool = False) -> List[R]:
    """Apply fn to every item and return results in input order

    max_workers <= 1 runs inline. With processes=True, fn and items must be
    picklable. The first exception raised by fn propagates after pending work
    is cancelled.
    """
    items = list(items)
    if max_workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]

    workers = min(max_workers, len(items))
    pool_cls = ProcessPoolExecutor if processes else ThreadPoolExecutor
    logger.debug("Fanning out %d tasks over %d %s", len(items), workers,
                 "processes" if processes else "threads")

    executor: Executor
    with pool_cls(max_workers=workers) as executor:
        futures = [executor.submit(fn, item) for item in items]
        try:
            return [future.result() for future in futures]
        finally:
            for future in futures:
                future.cancel()
