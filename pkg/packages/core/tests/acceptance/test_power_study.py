"""Size and power studies of the deviation and envelope tests."""

import math

import pytest
from core.domain.enums.enums import FunctionalStatisticId, StatisticId
from core.domain.value_objects.calibration_request import CalibrationRequest
from core.domain.value_objects.model_spec import ModelSpec
from core.domain.value_objects.statistic_spec import (
    FunctionalStatisticSpec,
    StatisticSpec,
)
from core.domain.value_objects.study_requests import (
    EnvelopeRejectionRequest,
    RejectionRateRequest,
)
from core.domain.value_objects.window import Window
from core.services.replication_runner import ReplicationRunner
from core.use_cases.calibrate_statistic import CalibrateStatisticUseCase
from core.use_cases.envelope_rejection_rate import EnvelopeRejectionRateUseCase
from core.use_cases.estimate_rejection_rate import EstimateRejectionRateUseCase

WINDOW = Window(x0=0, y0=0, x1=10, y1=10)
M = math.sqrt(2) * 10
NULL = ModelSpec.poisson(WINDOW, 2.0)
MATERN = ModelSpec.matern(WINDOW, 2.0, 0.1, 1.0)
STRAUSS = ModelSpec.strauss(WINDOW, 4.5, 0.1, 0.35)

STATISTICS = {
    "cluster": StatisticSpec(id=StatisticId.T_CLUSTER, r=0.1, M=M, r_f=1.5),
    "loop": StatisticSpec(id=StatisticId.T_LOOP, r=0.5, M=M, r_f=1.5),
}
OVERSIZED_T_CLUSTER = pytest.mark.xfail(
    strict=False, reason="observed null rejection rate 8.2% over 500 replications"
)

# Envelope powers in percent: (alternative, curve) -> reference value.
ENVELOPE_POWER = {
    ("matern", FunctionalStatisticId.RIPLEY_L): 42.6,
    ("matern", FunctionalStatisticId.DEATH_CURVE): 41.5,
    ("matern", FunctionalStatisticId.BETTI_SURFACE): 27.0,
    ("strauss", FunctionalStatisticId.RIPLEY_L): 20.5,
    ("strauss", FunctionalStatisticId.DEATH_CURVE): 26.3,
    ("strauss", FunctionalStatisticId.BETTI_SURFACE): 32.2,
}
ENVELOPE_ALTERNATIVES = {
    "matern": ModelSpec.matern(WINDOW, 20.0, 0.1, 0.1),
    "strauss": ModelSpec.strauss(WINDOW, 2.1, 0.1, 0.1),
}


@pytest.fixture(scope="module")
def runner():
    return ReplicationRunner(workers=2)


async def _rejection_rate(runner, name, model):
    calibration = await CalibrateStatisticUseCase(runner).execute(
        CalibrationRequest(model=NULL, statistic=STATISTICS[name], n_sims=2000, seed=1)
    )
    request = RejectionRateRequest(
        model=model, calibration=calibration, n_reps=500, seed=99
    )
    return (await EstimateRejectionRateUseCase(runner).execute(request)).rate


async def _envelope_rate(runner, model, curve, n_sims, n_reps, seed):
    request = EnvelopeRejectionRequest(
        model=model,
        null_model=NULL,
        statistic=FunctionalStatisticSpec(id=curve, M=M, r_f=1.5),
        n_sims=n_sims,
        n_reps=n_reps,
        seed=seed,
    )
    return (await EnvelopeRejectionRateUseCase(runner).execute(request)).rate


@pytest.mark.slow
@pytest.mark.parametrize(
    "name", [pytest.param("cluster", marks=OVERSIZED_T_CLUSTER), "loop"]
)
async def test_it_holds_its_size_under_the_null(runner, name):
    rate = await _rejection_rate(runner, name, NULL)

    assert 0.03 <= rate <= 0.07


@pytest.mark.slow
@pytest.mark.parametrize(
    ("name", "model", "least"),
    [
        ("cluster", MATERN, 0.5),
        ("cluster", STRAUSS, 0.5),
        ("loop", MATERN, 0.85),
        ("loop", STRAUSS, 0.6),
    ],
    ids=["cluster-matern", "cluster-strauss", "loop-matern", "loop-strauss"],
)
async def test_it_detects_the_alternatives(runner, name, model, least):
    rate = await _rejection_rate(runner, name, model)

    assert rate >= least


@pytest.mark.slow
async def test_it_keeps_the_envelope_test_at_its_level(runner):
    rate = await _envelope_rate(
        runner, NULL, FunctionalStatisticId.DEATH_CURVE, 199, 500, 5
    )

    assert 0.02 <= rate <= 0.08


@pytest.mark.slow
@pytest.mark.parametrize("alternative", ["matern", "strauss"])
async def test_it_reproduces_the_envelope_powers(runner, alternative):
    model = ENVELOPE_ALTERNATIVES[alternative]
    powers = {}
    for curve in (
        FunctionalStatisticId.RIPLEY_L,
        FunctionalStatisticId.DEATH_CURVE,
        FunctionalStatisticId.BETTI_SURFACE,
    ):
        rate = await _envelope_rate(runner, model, curve, 999, 200, 11)
        powers[curve] = 100 * rate
        reference = ENVELOPE_POWER[(alternative, curve)]
        assert abs(powers[curve] - reference) <= 12, (curve, powers[curve])

    ripley = powers[FunctionalStatisticId.RIPLEY_L]
    loops = powers[FunctionalStatisticId.BETTI_SURFACE]
    if alternative == "matern":
        assert ripley > loops
    else:
        assert loops > ripley
