"""Tests for the replication runner."""

import operator
from functools import partial

import pytest
from core.services.replication_runner import ReplicationRunner


class TestReplicationRunner:

    @pytest.mark.parametrize("workers", [1, 2])
    async def test_it_returns_results_in_index_order(self, workers):
        runner = ReplicationRunner(workers=workers, chunk_size=3)

        results = await runner.map(partial(pow, 2), list(range(10)))

        assert results == [2**i for i in range(10)]

    @pytest.mark.parametrize("workers", [1, 2])
    async def test_it_reports_progress_for_every_index(self, workers):
        runner = ReplicationRunner(workers=workers, chunk_size=4)
        seen: list[int] = []

        await runner.map(operator.neg, list(range(11)), on_progress=seen.append)

        assert sum(seen) == 11
        assert sorted(seen) == [3, 4, 4]

    async def test_it_handles_no_indices(self):
        assert await ReplicationRunner(workers=2).map(operator.neg, []) == []

    @pytest.mark.parametrize("workers", [1, 2])
    async def test_it_surfaces_a_failing_replication(self, workers):
        runner = ReplicationRunner(workers=workers, chunk_size=2)

        with pytest.raises(ZeroDivisionError):
            await runner.map(partial(operator.truediv, 1.0), [3, 2, 1, 0])

    def test_it_clamps_its_settings(self):
        runner = ReplicationRunner(workers=0, chunk_size=0)

        assert runner.workers == 1
        assert runner.chunk_size == 1
