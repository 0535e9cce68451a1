"""
JSON configuration loader.

Parses pipeline configs, utility specs and decision processes from JSON
documents. Unknown keys and wrong types are rejected with a ConfigError
naming the key path (for example `ga.populaton_size`).
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from application.defaults import SATISFICING_THRESHOLD, TRAIN_FRACTION
from application.pipeline_config import AutoassociativeSpec, ModelSpec, PipelineConfig
from domain.entities.decision_process import DecisionProcess
from domain.exceptions import ConfigError
from domain.value_objects.feature_params import FeatureParams
from domain.value_objects.ga_config import GaConfig
from domain.value_objects.process_step import ProcessStep, RationalityCriteria
from domain.value_objects.train_config import TrainConfig
from domain.value_objects.utility import UtilityOption, UtilitySpec

logger = logging.getLogger(__name__)

PIPELINE_KEYS = (
    "mode", "transform", "imputer", "model", "autoassociative", "ga", "split",
    "utility", "missing_tokens", "seed", "max_workers",
)
TRAIN_KEYS = ("learning_rate", "epochs", "batch_size", "seed", "init_scale", "early_stop_tol")
GA_KEYS = (
    "population_size", "generations", "crossover_rate", "mutation_rate", "mutation_sigma",
    "tournament_size", "elitism_count", "bounds", "seed",
)


def _join(path: str, key: str) -> str:
    return f"{path}.{key}" if path else key


def _object(value: Any, path: str, allowed) -> Dict[str, Any]:
    """Check a JSON object and its keys."""
    if not isinstance(value, dict):
        raise ConfigError(f"{path or 'document'}: expected a JSON object")
    for key in value:
        if key not in allowed:
            raise ConfigError(f"{_join(path, key)}: unknown key")
    return value


def _integer(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{path}: expected an integer, got {value!r}")
    return value


def _number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{path}: expected a number, got {value!r}")
    return float(value)


def _text(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise ConfigError(f"{path}: expected text, got {value!r}")
    return value


def _list(value: Any, path: str) -> list:
    if not isinstance(value, list):
        raise ConfigError(f"{path}: expected a list")
    return value


def _relabel(path: str, error: ConfigError) -> ConfigError:
    return ConfigError(f"{path}: {error}")


def load_json(path) -> Any:
    """
    Read a JSON document.

    Raises:
        ConfigError: Unreadable file or invalid JSON
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as error:
        raise ConfigError(f"cannot read config '{path}': {error}") from error
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise ConfigError(f"config '{path}' is not valid JSON: {error}") from error


def parse_train_config(data: Any, path: str = "train") -> TrainConfig:
    """Parse a TrainConfig fragment; absent keys keep their defaults."""
    data = _object(data, path, TRAIN_KEYS)
    kwargs = {}
    for key in ("epochs", "batch_size", "seed"):
        if key in data:
            kwargs[key] = _integer(data[key], _join(path, key))
    for key in ("learning_rate", "init_scale", "early_stop_tol"):
        if key in data:
            kwargs[key] = _number(data[key], _join(path, key))
    try:
        return TrainConfig(**kwargs)
    except ConfigError as error:
        raise _relabel(path, error) from error


def parse_ga_config(data: Any, path: str = "ga") -> GaConfig:
    """Parse a GaConfig fragment; absent keys keep their defaults."""
    data = _object(data, path, GA_KEYS)
    kwargs = {}
    for key in ("population_size", "generations", "tournament_size", "elitism_count", "seed"):
        if key in data:
            kwargs[key] = _integer(data[key], _join(path, key))
    for key in ("crossover_rate", "mutation_rate", "mutation_sigma"):
        if key in data:
            kwargs[key] = _number(data[key], _join(path, key))
    if "bounds" in data:
        bounds = []
        for gene, pair in enumerate(_list(data["bounds"], _join(path, "bounds"))):
            gene_path = f"{path}.bounds[{gene}]"
            pair = _list(pair, gene_path)
            if len(pair) != 2:
                raise ConfigError(f"{gene_path}: expected [low, high]")
            bounds.append((_number(pair[0], gene_path), _number(pair[1], gene_path)))
        kwargs["bounds"] = tuple(bounds)
    try:
        return GaConfig(**kwargs)
    except ConfigError as error:
        raise _relabel(path, error) from error


def parse_utility_spec(data: Any, path: str = "") -> UtilitySpec:
    """
    Parse {"objective"?, "options": [{label, impact, probability}, ...]}.
    """
    data = _object(data, path, ("objective", "options"))
    if "options" not in data:
        raise ConfigError(f"{_join(path, 'options')}: required key is missing")
    options = []
    for index, option in enumerate(_list(data["options"], _join(path, "options"))):
        option_path = f"{_join(path, 'options')}[{index}]"
        option = _object(option, option_path, ("label", "impact", "probability"))
        for key in ("label", "impact", "probability"):
            if key not in option:
                raise ConfigError(f"{option_path}.{key}: required key is missing")
        try:
            options.append(
                UtilityOption(
                    _text(option["label"], f"{option_path}.label"),
                    _number(option["impact"], f"{option_path}.impact"),
                    _number(option["probability"], f"{option_path}.probability"),
                )
            )
        except ConfigError as error:
            raise _relabel(option_path, error) from error
    kwargs = {}
    if "objective" in data:
        kwargs["objective"] = _text(data["objective"], _join(path, "objective"))
    return UtilitySpec(options, **kwargs)


def _parse_step(data: Any, path: str) -> ProcessStep:
    data = _object(data, path, ("label", "kind", "criteria", "power"))
    for key in ("label", "power"):
        if key not in data:
            raise ConfigError(f"{path}.{key}: required key is missing")
    label = _text(data["label"], f"{path}.label")
    power = _number(data["power"], f"{path}.power")
    if ("kind" in data) == ("criteria" in data):
        raise ConfigError(f"{path}: give exactly one of 'kind' or 'criteria'")
    if "kind" in data:
        return ProcessStep(label, _text(data["kind"], f"{path}.kind"), power)
    criteria = _object(data["criteria"], f"{path}.criteria", ("logical", "evidence_based", "optimized"))
    flags = {}
    for key in ("logical", "evidence_based", "optimized"):
        value = criteria.get(key)
        if not isinstance(value, bool):
            raise ConfigError(f"{path}.criteria.{key}: expected true or false")
        flags[key] = value
    return ProcessStep.from_criteria(label, RationalityCriteria(**flags), power)


def parse_decision_process(data: Any) -> Tuple[DecisionProcess, float]:
    """
    Parse {"name", "threshold"?, "steps": [{label, kind | criteria, power}]}.

    Returns:
        (process, threshold); the threshold defaults to 1
    """
    data = _object(data, "", ("name", "threshold", "steps"))
    for key in ("name", "steps"):
        if key not in data:
            raise ConfigError(f"{key}: required key is missing")
    steps = [_parse_step(step, f"steps[{i}]") for i, step in enumerate(_list(data["steps"], "steps"))]
    threshold = _number(data.get("threshold", SATISFICING_THRESHOLD), "threshold")
    return DecisionProcess(_text(data["name"], "name"), steps), threshold


def parse_pipeline_config(data: Any, path: str = "") -> PipelineConfig:
    """
    Parse a PipelineConfig document.

    Only `mode` is required. The mode contract is checked by PipelineConfig.

    Raises:
        ConfigError: Naming the offending key path
    """
    data = _object(data, path, PIPELINE_KEYS)
    if "mode" not in data:
        raise ConfigError(f"{_join(path, 'mode')}: required key is missing")
    kwargs: Dict[str, Any] = {"mode": _text(data["mode"], _join(path, "mode"))}

    if "transform" in data:
        transform_path = _join(path, "transform")
        transform = _object(data["transform"], transform_path, ("domain", "window_size", "hop"))
        if "domain" in transform:
            kwargs["transform"] = _text(transform["domain"], f"{transform_path}.domain")
        geometry = {
            key: _integer(transform[key], f"{transform_path}.{key}")
            for key in ("window_size", "hop")
            if key in transform
        }
        try:
            kwargs["feature_params"] = FeatureParams(**geometry)
        except ConfigError as error:
            raise _relabel(transform_path, error) from error

    if "imputer" in data:
        kwargs["imputer"] = _text(data["imputer"], _join(path, "imputer"))

    if "model" in data:
        model_path = _join(path, "model")
        model = _object(data["model"], model_path, ("train", "hidden_sizes", "task"))
        model_kwargs = {}
        if "train" in model:
            model_kwargs["train"] = parse_train_config(model["train"], f"{model_path}.train")
        if model.get("hidden_sizes") is not None:
            sizes = _list(model["hidden_sizes"], f"{model_path}.hidden_sizes")
            model_kwargs["hidden_sizes"] = tuple(
                _integer(s, f"{model_path}.hidden_sizes[{i}]") for i, s in enumerate(sizes)
            )
        if "task" in model:
            model_kwargs["task"] = _text(model["task"], f"{model_path}.task")
        kwargs["model"] = ModelSpec(**model_kwargs)

    if "autoassociative" in data:
        auto_path = _join(path, "autoassociative")
        auto = _object(data["autoassociative"], auto_path, ("train", "hidden_size"))
        auto_kwargs = {}
        if "train" in auto:
            auto_kwargs["train"] = parse_train_config(auto["train"], f"{auto_path}.train")
        if auto.get("hidden_size") is not None:
            auto_kwargs["hidden_size"] = _integer(auto["hidden_size"], f"{auto_path}.hidden_size")
        kwargs["autoassociative"] = AutoassociativeSpec(**auto_kwargs)

    if "ga" in data:
        kwargs["ga"] = parse_ga_config(data["ga"], _join(path, "ga"))

    if "split" in data:
        split_path = _join(path, "split")
        split = _object(data["split"], split_path, ("train_fraction",))
        kwargs["train_fraction"] = _number(
            split.get("train_fraction", TRAIN_FRACTION), f"{split_path}.train_fraction"
        )

    if data.get("utility") is not None:
        kwargs["utility"] = parse_utility_spec(data["utility"], _join(path, "utility"))

    if "missing_tokens" in data:
        tokens_path = _join(path, "missing_tokens")
        tokens = _list(data["missing_tokens"], tokens_path)
        kwargs["missing_tokens"] = frozenset(
            _text(t, f"{tokens_path}[{i}]") for i, t in enumerate(tokens)
        )

    for key in ("seed", "max_workers"):
        if key in data:
            kwargs[key] = _integer(data[key], _join(path, key))

    try:
        return PipelineConfig(**kwargs)
    except ConfigError as error:
        if path:
            raise _relabel(path, error) from error
        raise


def parse_comparison(data: Any) -> Union[PipelineConfig, Tuple[PipelineConfig, PipelineConfig]]:
    """
    Parse a compare document: {"first": cfg, "second": cfg} or one base config.
    """
    if isinstance(data, dict) and ("first" in data or "second" in data):
        data = _object(data, "", ("first", "second"))
        for key in ("first", "second"):
            if key not in data:
                raise ConfigError(f"{key}: required key is missing")
        return parse_pipeline_config(data["first"], "first"), parse_pipeline_config(data["second"], "second")
    return parse_pipeline_config(data)


def load_pipeline_config(path: Optional[str], seed: Optional[int] = None) -> PipelineConfig:
    """
    Load a PipelineConfig file, or defaults when no file is given.

    Args:
        path: JSON file, or None for the default flexibly-bounded config
        seed: Overrides the file's seed when given
    """
    config = PipelineConfig() if path is None else parse_pipeline_config(load_json(path))
    if seed is not None:
        config = config.with_seed(seed)
    logger.debug("config mode=%s seed=%d", config.mode.value, config.seed)
    return config
