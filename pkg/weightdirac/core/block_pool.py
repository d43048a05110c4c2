"""Bounded worker pool over weight blocks."""

import asyncio
import time
from collections.abc import Callable, Sequence
from typing import TypeVar

from weightdirac.logging_config import get_logger

logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class BlockPool:
    """Maps a pure per-block function over an ordered list of inputs.

    Results come back in input order, so whatever is emitted from them does not
    depend on ``max_workers``.
    """

    def __init__(self, max_workers: int = 1):
        """Initialize the pool.

        Args:
            max_workers: Maximum number of blocks computed at the same time
        """
        if max_workers < 1:
            raise ValueError("max_workers must be at least 1")
        self.max_workers = max_workers

    async def map(self, func: Callable[[T], R], items: Sequence[T]) -> list[R]:
        """Run ``func`` on every item in worker threads.

        Every task settles before the first failure, if any, is re-raised.
        """
        semaphore = asyncio.Semaphore(self.max_workers)
        started = time.perf_counter()
        logger.debug("pool_started", tasks=len(items), max_workers=self.max_workers)

        async def run_with_limit(item: T) -> R:
            async with semaphore:
                return await asyncio.to_thread(func, item)

        tasks = [asyncio.create_task(run_with_limit(item)) for item in items]
        results = await asyncio.gather(*tasks, return_exceptions=True)

        failures = [(item, r) for item, r in zip(items, results) if isinstance(r, BaseException)]
        for item, error in failures:
            logger.error("block_task_failed", item=str(item), error=str(error))
        logger.debug(
            "pool_finished",
            tasks=len(items),
            failed=len(failures),
            elapsed=round(time.perf_counter() - started, 3),
        )
        if failures:
            raise failures[0][1]
        return list(results)  # type: ignore[arg-type]

    def run(self, func: Callable[[T], R], items: Sequence[T]) -> list[R]:
        """Synchronous entry point for callers outside an event loop."""
        return asyncio.run(self.map(func, items))
