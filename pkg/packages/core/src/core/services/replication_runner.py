"""
Fan-out of independent Monte-Carlo replications.
"""

import asyncio
import time
from collections.abc import Callable, Sequence
from concurrent.futures import Executor, ProcessPoolExecutor
from typing import Any, TypeVar

import structlog

T = TypeVar("T")

ProgressCallback = Callable[[int], None]

logger = structlog.get_logger(__name__)


def _run_chunk(fn: Callable[[int], T], indices: Sequence[int]) -> list[T]:
    return [fn(i) for i in indices]


async def _gather_settled(futures: Sequence["asyncio.Future[Any]"]) -> list[Any]:
    """Wait for every chunk, then surface the first failure in index order."""
    results = await asyncio.gather(*futures, return_exceptions=True)
    for result in results:
        if isinstance(result, BaseException):
            raise result
    return list(results)


class ReplicationRunner:
    """Maps a picklable function over replication indices.

    Results come back in index order whatever the worker count, and a
    single worker runs everything in the calling process.
    """

    def __init__(self, workers: int = 1, chunk_size: int = 25):
        self.workers = max(1, workers)
        self.chunk_size = max(1, chunk_size)

    async def map(
        self,
        fn: Callable[[int], T],
        indices: Sequence[int],
        on_progress: ProgressCallback | None = None,
    ) -> list[T]:
        started = time.perf_counter()
        chunks = [
            list(indices[k : k + self.chunk_size])
            for k in range(0, len(indices), self.chunk_size)
        ]

        if self.workers == 1 or len(chunks) <= 1:
            results: list[T] = []
            for chunk in chunks:
                results.extend(_run_chunk(fn, chunk))
                if on_progress:
                    on_progress(len(chunk))
                await asyncio.sleep(0)
        else:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                results = await self._map_in_pool(pool, fn, chunks, on_progress)

        logger.debug(
            "replications_done",
            n=len(indices),
            workers=self.workers,
            elapsed=round(time.perf_counter() - started, 3),
        )
        return results

    @staticmethod
    async def _map_in_pool(
        pool: Executor,
        fn: Callable[[int], T],
        chunks: list[list[int]],
        on_progress: ProgressCallback | None,
    ) -> list[T]:
        loop = asyncio.get_running_loop()

        def report(size: int) -> Callable[["asyncio.Future[Any]"], None]:
            def done(future: "asyncio.Future[Any]") -> None:
                if on_progress and not future.cancelled() and not future.exception():
                    on_progress(size)

            return done

        futures = []
        for chunk in chunks:
            future = loop.run_in_executor(pool, _run_chunk, fn, chunk)
            future.add_done_callback(report(len(chunk)))
            futures.append(future)

        results: list[T] = []
        for chunk_result in await _gather_settled(futures):
            results.extend(chunk_result)
        return results
