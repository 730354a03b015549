import pytest
from core.domain.enums.enums import ModelVariant
from core.domain.value_objects.model_spec import ModelSpec, StraussParams
from core.domain.value_objects.window import Window
from pydantic import ValidationError

WINDOW = Window(x0=0, y0=0, x1=10, y1=10)


class TestModelSpec:

    @pytest.mark.parametrize(
        ("model", "label"),
        [
            (ModelSpec.poisson(WINDOW, 2.0), "Poi(2)"),
            (ModelSpec.matern(WINDOW, 0.5, 0.3, 4.0), "MatC(0.5, 0.3, 4)"),
            (ModelSpec.strauss(WINDOW, 4.5, 0.1, 0.35), "Str(4.5, 0.1, 0.35)"),
        ],
    )
    def test_it_labels_models(self, model, label):
        assert model.label == label

    def test_it_knows_closed_form_counts(self):
        assert ModelSpec.poisson(WINDOW, 2.0).expected_count == 200
        assert ModelSpec.matern(WINDOW, 0.5, 0.3, 4.0).expected_count == 200
        assert ModelSpec.strauss(WINDOW, 2.0, 0.5, 0.3).expected_count is None

    def test_it_parses_a_job_file_shape(self):
        model = ModelSpec.model_validate(
            {
                "variant": "strauss",
                "window": [0, 0, 5, 5],
                "params": {"beta": 2.0, "gamma": 0.2, "radius": 0.3},
                "chain": 400,
                "burnin": 100,
            }
        )

        assert model.variant is ModelVariant.STRAUSS
        assert model.params == StraussParams(beta=2.0, gamma=0.2, radius=0.3)
        assert model.chain == 400

    @pytest.mark.parametrize(
        "data",
        [
            {"variant": "poisson", "window": "0,0,1,1", "params": {"kappa": 1.0}},
            {"variant": "matern", "window": "0,0,1,1", "params": {"intensity": 1}},
            {"variant": "gibbs", "window": "0,0,1,1", "params": {}},
            {
                "variant": "strauss",
                "window": "0,0,1,1",
                "params": {"beta": 1, "gamma": 1.5, "radius": 0.1},
            },
        ],
    )
    def test_it_rejects_mismatched_parameters(self, data):
        with pytest.raises(ValidationError):
            ModelSpec.model_validate(data)

    def test_it_needs_the_chain_to_cover_the_burn_in(self):
        with pytest.raises(ValidationError):
            ModelSpec.strauss(WINDOW, 2.0, 0.5, 0.3, chain=10, burnin=20)

    def test_it_dumps_the_job_file_shape(self):
        dumped = ModelSpec.poisson(WINDOW, 2.0).model_dump(mode="json")

        assert dumped["variant"] == "poisson"
        assert dumped["window"] == [0.0, 0.0, 10.0, 10.0]
        assert dumped["params"] == {"intensity": 2.0}
