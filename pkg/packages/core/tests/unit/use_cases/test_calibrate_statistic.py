import numpy as np
import pytest
from core.domain.enums.enums import StatisticId
from core.domain.services.statistics import scalar_replicate
from core.domain.value_objects.calibration_request import CalibrationRequest
from core.domain.value_objects.model_spec import ModelSpec
from core.domain.value_objects.statistic_spec import StatisticSpec
from core.services.replication_runner import ReplicationRunner
from core.use_cases.calibrate_statistic import CalibrateStatisticUseCase

T_CLUSTER = StatisticSpec(id=StatisticId.T_CLUSTER, r=0.2, M=10.0, r_f=1.5)


class TestCalibrateStatisticUseCase:

    @pytest.fixture
    def use_case(self, runner):
        return CalibrateStatisticUseCase(runner)

    @pytest.fixture
    def request_(self, small_poisson):
        return CalibrationRequest(
            model=small_poisson, statistic=T_CLUSTER, n_sims=10, seed=21
        )

    async def test_it_records_one_value_per_stream(self, use_case, request_):
        calibration = await use_case.execute(request_)

        expected = [
            scalar_replicate(request_.model, [T_CLUSTER], 21, k)[0] for k in range(10)
        ]
        assert calibration.values == expected
        assert calibration.mean == pytest.approx(np.mean(expected))
        assert calibration.variance == pytest.approx(np.var(expected, ddof=1))
        assert calibration.seed == 21

    async def test_it_does_not_depend_on_the_worker_count(self, use_case, request_):
        pooled = CalibrateStatisticUseCase(ReplicationRunner(workers=2, chunk_size=3))

        assert await pooled.execute(request_) == await use_case.execute(request_)

    async def test_it_reports_progress(self, use_case, request_):
        done: list[int] = []

        await use_case.execute(request_, on_progress=done.append)

        assert sum(done) == 10

    async def test_it_flags_a_model_without_points(self, use_case, small_window):
        request_ = CalibrationRequest(
            model=ModelSpec.poisson(small_window, 0.0),
            statistic=T_CLUSTER,
            n_sims=4,
            seed=1,
        )

        calibration = await use_case.execute(request_)

        assert calibration.degenerate
        assert calibration.values == [0.0] * 4
