from functools import partial

import numpy as np

from ..domain.entities.summary import MeanCurve
from ..domain.services.statistics import functional_grid, functional_replicate
from ..domain.value_objects.study_requests import MeanCurvesRequest
from ..services.replication_runner import ProgressCallback, ReplicationRunner


class ComputeMeanCurvesUseCase:
    """Pointwise mean and spread of a functional statistic under a model."""

    def __init__(self, runner: ReplicationRunner):
        self._runner = runner

    async def execute(
        self,
        request: MeanCurvesRequest,
        on_progress: ProgressCallback | None = None,
    ) -> MeanCurve:
        replicate = partial(
            functional_replicate, request.model, request.statistic, request.seed
        )
        curves = np.vstack(
            await self._runner.map(replicate, range(request.n_sims), on_progress)
        )
        grid = functional_grid(request.statistic, request.model.window)
        return MeanCurve(
            model=request.model,
            statistic=request.statistic,
            grid=tuple(grid.tolist()),
            mean=tuple(curves.mean(axis=0).tolist()),
            sd=tuple(curves.std(axis=0, ddof=1).tolist()),
            n_sims=request.n_sims,
        )
