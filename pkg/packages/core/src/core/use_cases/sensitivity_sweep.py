from functools import partial

import numpy as np

from ..domain.entities.calibration import Calibration, TestReport
from ..domain.entities.exceptions import WindowMismatchError
from ..domain.services.gof import deviation_test_value
from ..domain.services.statistics import scalar_replicate, scalar_values
from ..domain.value_objects.statistic_spec import StatisticSpec
from ..domain.value_objects.study_requests import SweepRequest
from ..services.replication_runner import ProgressCallback, ReplicationRunner


class SensitivitySweepUseCase:
    """Deviation-test p-values of one pattern across integration bounds.

    Each null replication yields the statistic for every bound from a single
    diagram, so the sweep costs one calibration.
    """

    def __init__(self, runner: ReplicationRunner):
        self._runner = runner

    async def execute(
        self,
        request: SweepRequest,
        on_progress: ProgressCallback | None = None,
    ) -> list[TestReport]:
        if request.pattern.window != request.model.window:
            raise WindowMismatchError(
                request.model.window.to_flag(), request.pattern.window.to_flag()
            )
        specs = [
            StatisticSpec(id=request.statistic, r=r, M=request.M, r_f=request.r_f)
            for r in request.r_values
        ]
        replicate = partial(scalar_replicate, request.model, specs, request.seed)
        table = np.array(
            await self._runner.map(replicate, range(request.n_sims), on_progress),
            dtype=float,
        )
        observed = scalar_values(request.pattern, specs)

        reports = []
        for column, (spec, value) in enumerate(zip(specs, observed, strict=True)):
            calibration = Calibration.from_values(
                request.model, spec, request.seed, table[:, column]
            )
            reports.append(deviation_test_value(value, calibration, request.alpha))
        return reports
