from functools import partial

import structlog

from ..domain.entities.calibration import RejectionSummary
from ..domain.services.gof import deviation_test_value
from ..domain.services.statistics import scalar_replicate
from ..domain.value_objects.study_requests import RejectionRateRequest
from ..services.replication_runner import ProgressCallback, ReplicationRunner
from ..utils.seeding import derive_master

logger = structlog.get_logger(__name__)


class EstimateRejectionRateUseCase:

    def __init__(self, runner: ReplicationRunner):
        self._runner = runner

    async def execute(
        self,
        request: RejectionRateRequest,
        on_progress: ProgressCallback | None = None,
    ) -> RejectionSummary:
        """
        Fraction of deviation tests rejecting over draws from ``request.model``.

        Observed patterns come from a stream family derived from
        ``request.seed``, disjoint from the calibration's null draws even when
        both use the same master seed.
        """
        calibration = request.calibration
        replicate = partial(
            scalar_replicate,
            request.model,
            [calibration.statistic],
            derive_master(request.seed, "observed"),
        )
        rows = await self._runner.map(replicate, range(request.n_reps), on_progress)
        reports = [
            deviation_test_value(row[0], calibration, request.alpha) for row in rows
        ]

        summary = RejectionSummary(
            model=request.model.label,
            statistic=calibration.statistic.id.value,
            alpha=request.alpha,
            p_values=[r.p_value for r in reports],
            n_rejected=sum(r.reject for r in reports),
        )
        logger.info(
            "rejection_rate",
            model=summary.model,
            statistic=summary.statistic,
            n_reps=summary.n_reps,
            rate=summary.rate,
        )
        return summary
