"""
Unit tests for JSON configuration parsing.
"""
import json

import pytest

from application.pipeline_mode import DecisionTask, PipelineMode
from domain.exceptions import ConfigError
from domain.value_objects.feature_domain import FeatureDomain
from domain.value_objects.imputation_method import ImputationMethod
from domain.value_objects.utility import Objective
from infrastructure.config import config_loader


class TestPipelineConfigParsing:
    """Test suite for pipeline config documents."""

    def test_minimal_document(self):
        """Only the mode is required."""
        config = config_loader.parse_pipeline_config({"mode": "bounded"})
        assert config.mode is PipelineMode.BOUNDED
        assert config.imputer is ImputationMethod.COLUMN_MEAN

    def test_full_document(self):
        """Every section reaches its value object."""
        config = config_loader.parse_pipeline_config(
            {
                "mode": "flexibly_bounded",
                "transform": {"domain": "time-frequency", "window_size": 4, "hop": 2},
                "model": {"train": {"epochs": 10, "learning_rate": 0.1}, "hidden_sizes": [4, 3], "task": "regression"},
                "autoassociative": {"train": {"epochs": 5}, "hidden_size": 2},
                "ga": {"population_size": 20, "generations": 15, "bounds": [[0, 1]]},
                "split": {"train_fraction": 0.7},
                "utility": {"options": [{"label": "a", "impact": 1, "probability": 0.5}]},
                "missing_tokens": ["NA", ""],
                "seed": 11,
                "max_workers": 2,
            }
        )
        assert config.transform is FeatureDomain.TIME_FREQUENCY
        assert config.feature_params.window_size == 4
        assert config.model.train.epochs == 10
        assert config.model.hidden_sizes == (4, 3)
        assert config.model.task is DecisionTask.REGRESSION
        assert config.autoassociative.hidden_size == 2
        assert config.ga.population_size == 20
        assert config.ga.bounds == ((0.0, 1.0),)
        assert config.train_fraction == pytest.approx(0.7)
        assert config.utility.options[0].label == "a"
        assert config.missing_tokens == frozenset({"NA", ""})
        assert config.seed == 11
        assert config.max_workers == 2

    def test_mode_required(self):
        """A document without mode is rejected."""
        with pytest.raises(ConfigError, match="mode"):
            config_loader.parse_pipeline_config({"seed": 1})

    def test_unknown_key_named_with_path(self):
        """Misspelled keys are reported with their full path."""
        with pytest.raises(ConfigError, match=r"ga\.populaton_size: unknown key"):
            config_loader.parse_pipeline_config({"mode": "bounded", "ga": {"populaton_size": 5}})

    def test_wrong_type_named_with_path(self):
        """Wrong value types name the offending key."""
        with pytest.raises(ConfigError, match=r"model\.train\.epochs"):
            config_loader.parse_pipeline_config({"mode": "bounded", "model": {"train": {"epochs": "ten"}}})

    def test_booleans_are_not_numbers(self):
        """true is not accepted where an integer is expected."""
        with pytest.raises(ConfigError, match="seed"):
            config_loader.parse_pipeline_config({"mode": "bounded", "seed": True})

    def test_invalid_value_relabelled(self):
        """Value-object errors carry the section path."""
        with pytest.raises(ConfigError, match=r"^ga: "):
            config_loader.parse_pipeline_config({"mode": "bounded", "ga": {"population_size": 1}})

    def test_mode_contract_enforced(self):
        """Bounded documents cannot select signal transforms."""
        with pytest.raises(ConfigError, match="time-domain"):
            config_loader.parse_pipeline_config({"mode": "bounded", "transform": {"domain": "wavelet"}})

    def test_bad_bounds_pair(self):
        """Bounds are [low, high] pairs."""
        with pytest.raises(ConfigError, match=r"ga\.bounds\[0\]"):
            config_loader.parse_ga_config({"bounds": [[0, 1, 2]]})

    def test_load_with_seed_override(self, tmp_path):
        """A command-line seed replaces the file's seed."""
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"mode": "bounded", "seed": 3}))
        assert config_loader.load_pipeline_config(str(path)).seed == 3
        assert config_loader.load_pipeline_config(str(path), seed=9).seed == 9

    def test_defaults_without_file(self):
        """No file gives the default flexibly-bounded config."""
        assert config_loader.load_pipeline_config(None).mode is PipelineMode.FLEXIBLY_BOUNDED

    def test_invalid_json(self, tmp_path):
        """Malformed JSON is a config error."""
        path = tmp_path / "broken.json"
        path.write_text("{mode:")
        with pytest.raises(ConfigError, match="not valid JSON"):
            config_loader.load_json(path)

    def test_missing_file(self, tmp_path):
        """Unreadable files are config errors."""
        with pytest.raises(ConfigError, match="cannot read"):
            config_loader.load_json(tmp_path / "absent.json")


class TestComparisonParsing:
    """Test suite for compare documents."""

    def test_pair(self):
        """first/second documents give two configs."""
        first, second = config_loader.parse_comparison(
            {"first": {"mode": "bounded"}, "second": {"mode": "flexibly_bounded"}}
        )
        assert first.mode is PipelineMode.BOUNDED
        assert second.mode is PipelineMode.FLEXIBLY_BOUNDED

    def test_single_base_config(self):
        """A plain config document is returned as is."""
        config = config_loader.parse_comparison({"mode": "bounded", "seed": 4})
        assert config.seed == 4

    def test_pair_needs_both(self):
        """A pair document must hold both configs."""
        with pytest.raises(ConfigError, match="second"):
            config_loader.parse_comparison({"first": {"mode": "bounded"}})

    def test_errors_name_the_side(self):
        """Errors inside a side are prefixed with its name."""
        with pytest.raises(ConfigError, match=r"^second: "):
            config_loader.parse_comparison(
                {"first": {"mode": "bounded"}, "second": {"mode": "bounded", "imputer": "correlation_machine"}}
            )


class TestUtilityAndProcessParsing:
    """Test suite for utility specs and decision processes."""

    def test_utility_spec(self):
        """Options and objective are parsed."""
        spec = config_loader.parse_utility_spec(
            {
                "objective": "minimize_loss",
                "options": [
                    {"label": "a", "impact": 3, "probability": 0.5},
                    {"label": "b", "impact": 1.5, "probability": 1},
                ],
            }
        )
        assert spec.objective is Objective.MINIMIZE_LOSS
        assert [o.label for o in spec.options] == ["a", "b"]

    def test_utility_option_missing_key(self):
        """Each option needs label, impact and probability."""
        with pytest.raises(ConfigError, match=r"options\[0\]\.probability"):
            config_loader.parse_utility_spec({"options": [{"label": "a", "impact": 1}]})

    def test_utility_option_out_of_range(self):
        """Invalid probabilities name the option."""
        with pytest.raises(ConfigError, match=r"options\[1\]"):
            config_loader.parse_utility_spec(
                {
                    "options": [
                        {"label": "a", "impact": 1, "probability": 0.5},
                        {"label": "b", "impact": 1, "probability": 2},
                    ]
                }
            )

    def test_process_with_kinds_and_criteria(self):
        """Steps are tagged by kind or by the three criteria."""
        process, threshold = config_loader.parse_decision_process(
            {
                "name": "hire",
                "threshold": 2,
                "steps": [
                    {"label": "interview", "kind": "rational", "power": 0.6},
                    {
                        "label": "gut feeling",
                        "criteria": {"logical": False, "evidence_based": True, "optimized": True},
                        "power": 0.4,
                    },
                ],
            }
        )
        assert process.name == "hire"
        assert threshold == 2.0
        assert [s.is_rational() for s in process.steps] == [True, False]

    def test_default_threshold(self):
        """Threshold defaults to 1."""
        _, threshold = config_loader.parse_decision_process(
            {"name": "p", "steps": [{"label": "a", "kind": "rational", "power": 1}]}
        )
        assert threshold == 1.0

    def test_step_needs_exactly_one_tag(self):
        """A step gives kind or criteria, never both or neither."""
        with pytest.raises(ConfigError, match=r"steps\[0\]"):
            config_loader.parse_decision_process({"name": "p", "steps": [{"label": "a", "power": 1}]})

    def test_criteria_must_be_booleans(self):
        """Criteria flags are JSON booleans."""
        with pytest.raises(ConfigError, match=r"criteria\.optimized"):
            config_loader.parse_decision_process(
                {
                    "name": "p",
                    "steps": [
                        {
                            "label": "a",
                            "criteria": {"logical": True, "evidence_based": True, "optimized": 1},
                            "power": 1,
                        }
                    ],
                }
            )
