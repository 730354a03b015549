from functools import partial

import numpy as np
import structlog

from ..domain.entities.calibration import Calibration
from ..domain.services.statistics import scalar_replicate
from ..domain.value_objects.calibration_request import CalibrationRequest
from ..services.replication_runner import ProgressCallback, ReplicationRunner

logger = structlog.get_logger(__name__)


class CalibrateStatisticUseCase:

    def __init__(self, runner: ReplicationRunner):
        self._runner = runner

    async def execute(
        self,
        request: CalibrationRequest,
        on_progress: ProgressCallback | None = None,
    ) -> Calibration:
        """
        Simulate the null model and record the statistic's moments.

        Replication ``k`` draws stream ``k`` of ``request.seed``, so the result
        does not depend on how replications are scheduled.

        Args:
            request: model, statistic, number of simulations and master seed
            on_progress: called with the number of finished replications

        Returns:
            Calibration, flagged degenerate when the variance is zero
        """
        replicate = partial(
            scalar_replicate, request.model, [request.statistic], request.seed
        )
        rows = await self._runner.map(replicate, range(request.n_sims), on_progress)
        values = np.array([row[0] for row in rows], dtype=float)

        calibration = Calibration.from_values(
            request.model, request.statistic, request.seed, values
        )
        if calibration.degenerate:
            logger.warning(
                "degenerate_calibration",
                model=request.model.label,
                statistic=request.statistic.id.value,
            )
        logger.info(
            "calibrated",
            model=request.model.label,
            statistic=request.statistic.id.value,
            n_sims=request.n_sims,
            seed=request.seed,
            mean=calibration.mean,
            variance=calibration.variance,
        )
        return calibration
