"""Shared container providing the runner, storage gateways and use cases."""

from __future__ import annotations

from core.gateways.storage import CsvStore, JsonStore
from core.services.replication_runner import ReplicationRunner
from core.settings import AppSettings
from core.settings import settings as core_settings
from core.use_cases.calibrate_statistic import CalibrateStatisticUseCase
from core.use_cases.compute_mean_curves import ComputeMeanCurvesUseCase
from core.use_cases.envelope_rejection_rate import EnvelopeRejectionRateUseCase
from core.use_cases.estimate_rejection_rate import EstimateRejectionRateUseCase
from core.use_cases.run_deviation_test import RunDeviationTestUseCase
from core.use_cases.run_envelope_test import RunEnvelopeTestUseCase
from core.use_cases.sensitivity_sweep import SensitivitySweepUseCase


class BaseContainer:
    """Lazily builds and caches the objects a frontend needs.

    ``workers`` overrides ``compute.threads`` from the settings; every use
    case shares one runner.
    """

    def __init__(
        self, workers: int | None = None, settings: AppSettings | None = None
    ) -> None:
        self.settings = settings or core_settings
        self._workers = workers
        self._runner: ReplicationRunner | None = None
        self._calibrate_interactor: CalibrateStatisticUseCase | None = None
        self._deviation_test_interactor: RunDeviationTestUseCase | None = None
        self._envelope_test_interactor: RunEnvelopeTestUseCase | None = None
        self._mean_curves_interactor: ComputeMeanCurvesUseCase | None = None
        self._rejection_rate_interactor: EstimateRejectionRateUseCase | None = None
        self._envelope_rejection_interactor: EnvelopeRejectionRateUseCase | None = (
            None
        )
        self._sweep_interactor: SensitivitySweepUseCase | None = None
        # Slots above depend on the worker count; stores below do not.
        self._runner_cache_slots: tuple[str, ...] = tuple(
            slot for slot in vars(self) if slot not in ("settings", "_workers")
        )
        self._csv_store: CsvStore | None = None
        self._json_store: JsonStore | None = None

    @property
    def workers(self) -> int:
        return self._workers or self.settings.compute.threads

    def set_workers(self, workers: int | None) -> None:
        if workers != self._workers:
            self._workers = workers
            self._reset_runner_caches()

    def _reset_runner_caches(self) -> None:
        for slot in self._runner_cache_slots:
            setattr(self, slot, None)

    def get_runner(self) -> ReplicationRunner:
        if self._runner is None:
            self._runner = ReplicationRunner(
                workers=self.workers,
                chunk_size=self.settings.compute.chunk_size,
            )
        return self._runner

    def get_csv_store(self) -> CsvStore:
        if self._csv_store is None:
            self._csv_store = CsvStore()
        return self._csv_store

    def get_json_store(self) -> JsonStore:
        if self._json_store is None:
            self._json_store = JsonStore()
        return self._json_store

    def get_calibrate_interactor(self) -> CalibrateStatisticUseCase:
        if self._calibrate_interactor is None:
            self._calibrate_interactor = CalibrateStatisticUseCase(
                runner=self.get_runner()
            )
        return self._calibrate_interactor

    def get_deviation_test_interactor(self) -> RunDeviationTestUseCase:
        if self._deviation_test_interactor is None:
            self._deviation_test_interactor = RunDeviationTestUseCase()
        return self._deviation_test_interactor

    def get_envelope_test_interactor(self) -> RunEnvelopeTestUseCase:
        if self._envelope_test_interactor is None:
            self._envelope_test_interactor = RunEnvelopeTestUseCase(
                runner=self.get_runner()
            )
        return self._envelope_test_interactor

    def get_mean_curves_interactor(self) -> ComputeMeanCurvesUseCase:
        if self._mean_curves_interactor is None:
            self._mean_curves_interactor = ComputeMeanCurvesUseCase(
                runner=self.get_runner()
            )
        return self._mean_curves_interactor

    def get_rejection_rate_interactor(self) -> EstimateRejectionRateUseCase:
        if self._rejection_rate_interactor is None:
            self._rejection_rate_interactor = EstimateRejectionRateUseCase(
                runner=self.get_runner()
            )
        return self._rejection_rate_interactor

    def get_envelope_rejection_interactor(self) -> EnvelopeRejectionRateUseCase:
        if self._envelope_rejection_interactor is None:
            self._envelope_rejection_interactor = EnvelopeRejectionRateUseCase(
                runner=self.get_runner()
            )
        return self._envelope_rejection_interactor

    def get_sweep_interactor(self) -> SensitivitySweepUseCase:
        if self._sweep_interactor is None:
            self._sweep_interactor = SensitivitySweepUseCase(runner=self.get_runner())
        return self._sweep_interactor

    async def close(self) -> None:
        self._reset_runner_caches()
