import pytest
from core.domain.entities.exceptions import WindowMismatchError
from core.domain.enums.enums import StatisticId
from core.domain.services.point_processes import sample_poisson
from core.domain.value_objects.seed_spec import SeedSpec
from core.domain.value_objects.study_requests import SweepRequest
from core.use_cases.sensitivity_sweep import SensitivitySweepUseCase
from pydantic import ValidationError


class TestSensitivitySweepUseCase:

    @pytest.fixture
    def observed(self, small_window):
        return sample_poisson(small_window, 2.0, SeedSpec(master=31))

    async def test_it_reports_each_bound(self, runner, observed, small_poisson):
        request = SweepRequest(
            pattern=observed,
            model=small_poisson,
            statistic=StatisticId.T_CLUSTER,
            r_values=[0.1, 0.2, 0.3],
            M=10.0,
            r_f=1.5,
            n_sims=15,
            seed=2,
        )

        reports = await SensitivitySweepUseCase(runner).execute(request)

        assert [report.statistic.r for report in reports] == [0.1, 0.2, 0.3]
        assert all(report.n_sims == 15 for report in reports)
        assert all(0 <= report.p_value <= 1 for report in reports)

    async def test_it_rejects_a_pattern_from_another_window(
        self, runner, equilateral, small_poisson
    ):
        request = SweepRequest(
            pattern=equilateral,
            model=small_poisson,
            statistic=StatisticId.T_LOOP,
            r_values=[0.5],
            M=10.0,
            r_f=1.5,
            n_sims=5,
            seed=2,
        )

        with pytest.raises(WindowMismatchError):
            await SensitivitySweepUseCase(runner).execute(request)

    def test_it_keeps_bounds_below_the_final_radius(self, observed, small_poisson):
        with pytest.raises(ValidationError):
            SweepRequest(
                pattern=observed,
                model=small_poisson,
                statistic=StatisticId.T_LOOP,
                r_values=[0.5, 2.0],
                M=10.0,
                r_f=1.5,
                n_sims=5,
                seed=2,
            )
