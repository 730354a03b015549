from functools import partial

import numpy as np
import structlog

from ..domain.entities.calibration import RejectionSummary
from ..domain.services.envelope import global_envelope
from ..domain.services.statistics import functional_replicate
from ..domain.value_objects.study_requests import EnvelopeRejectionRequest
from ..services.replication_runner import ProgressCallback, ReplicationRunner
from ..utils.seeding import derive_master

logger = structlog.get_logger(__name__)


class EnvelopeRejectionRateUseCase:
    """Power (or size) of the global envelope test.

    One set of ``n_sims`` null curves is simulated and every observed draw is
    ranked against it.
    """

    def __init__(self, runner: ReplicationRunner):
        self._runner = runner

    async def execute(
        self,
        request: EnvelopeRejectionRequest,
        on_progress: ProgressCallback | None = None,
    ) -> RejectionSummary:
        null_replicate = partial(
            functional_replicate, request.null_model, request.statistic, request.seed
        )
        observed_replicate = partial(
            functional_replicate,
            request.model,
            request.statistic,
            derive_master(request.seed, "observed"),
        )
        nulls = np.vstack(
            await self._runner.map(null_replicate, range(request.n_sims), on_progress)
        )
        observed = await self._runner.map(
            observed_replicate, range(request.n_reps), on_progress
        )

        p_values = [
            global_envelope(curve, nulls, request.alpha).p_value for curve in observed
        ]
        summary = RejectionSummary(
            model=request.model.label,
            statistic=request.statistic.id.value,
            alpha=request.alpha,
            p_values=p_values,
            n_rejected=sum(p <= request.alpha for p in p_values),
        )
        logger.info(
            "envelope_rejection_rate",
            model=summary.model,
            statistic=summary.statistic,
            n_reps=summary.n_reps,
            rate=summary.rate,
        )
        return summary
