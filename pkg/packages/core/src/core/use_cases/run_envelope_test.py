from functools import partial

import numpy as np
import structlog

from ..domain.entities.calibration import EnvelopeReport
from ..domain.entities.exceptions import WindowMismatchError
from ..domain.services.envelope import global_envelope
from ..domain.services.statistics import (
    functional_grid,
    functional_replicate,
    functional_values,
)
from ..domain.value_objects.gof_requests import EnvelopeTestRequest
from ..services.replication_runner import ProgressCallback, ReplicationRunner

logger = structlog.get_logger(__name__)


class RunEnvelopeTestUseCase:

    def __init__(self, runner: ReplicationRunner):
        self._runner = runner

    async def execute(
        self,
        request: EnvelopeTestRequest,
        on_progress: ProgressCallback | None = None,
    ) -> EnvelopeReport:
        """
        Rank the observed curve among ``n_sims`` null curves.

        Raises:
            WindowMismatchError: If the pattern was observed in another window
            GridMismatchError: If observed and null curves differ in length
        """
        if request.pattern.window != request.model.window:
            raise WindowMismatchError(
                request.model.window.to_flag(), request.pattern.window.to_flag()
            )

        replicate = partial(
            functional_replicate, request.model, request.statistic, request.seed
        )
        nulls = await self._runner.map(replicate, range(request.n_sims), on_progress)
        observed = functional_values(request.pattern, request.statistic)
        envelope = global_envelope(observed, np.vstack(nulls), request.alpha)

        report = EnvelopeReport(
            statistic=request.statistic,
            model=request.model,
            grid=functional_grid(request.statistic, request.pattern.window).tolist(),
            observed=observed.tolist(),
            lower=envelope.lower.tolist(),
            upper=envelope.upper.tolist(),
            p_value=envelope.p_value,
            alpha=request.alpha,
            reject=envelope.p_value <= request.alpha,
            n_sims=request.n_sims,
            seed=request.seed,
        )
        logger.info(
            "envelope_test",
            statistic=request.statistic.id.value,
            n_sims=request.n_sims,
            p_value=report.p_value,
            reject=report.reject,
        )
        return report
