"""
Pipeline configuration value objects.

A PipelineConfig describes one end-to-end run. The mode fixes the imputer
and transform families and is validated at construction.
"""
from dataclasses import dataclass, field, replace
from typing import FrozenSet, Optional, Tuple

from application import defaults
from application.pipeline_mode import DecisionTask, PipelineMode
from domain.exceptions import ConfigError
from domain.value_objects.enum_parsing import parse_enum
from domain.value_objects.feature_domain import FeatureDomain
from domain.value_objects.feature_params import FeatureParams
from domain.value_objects.ga_config import GaConfig
from domain.value_objects.imputation_method import ImputationMethod
from domain.value_objects.train_config import TrainConfig
from domain.value_objects.utility import UtilitySpec

BOUNDED_IMPUTERS = (ImputationMethod.COLUMN_MEAN, ImputationMethod.ZERO_FILL)


@dataclass(frozen=True)
class ModelSpec:
    """Decision machine architecture and training settings."""

    train: TrainConfig = field(default_factory=TrainConfig)
    hidden_sizes: Optional[Tuple[int, ...]] = None
    task: DecisionTask = DecisionTask.AUTO

    def __post_init__(self) -> None:
        object.__setattr__(self, "task", parse_enum(DecisionTask, self.task, "model.task"))
        if self.hidden_sizes is not None:
            sizes = tuple(int(s) for s in self.hidden_sizes)
            if any(s < 1 for s in sizes):
                raise ConfigError(f"model.hidden_sizes must be positive, got {list(sizes)}")
            object.__setattr__(self, "hidden_sizes", sizes)


@dataclass(frozen=True)
class AutoassociativeSpec:
    """Correlation machine architecture and training settings."""

    train: TrainConfig = field(default_factory=TrainConfig)
    hidden_size: Optional[int] = None

    def __post_init__(self) -> None:
        if self.hidden_size is not None and self.hidden_size < 1:
            raise ConfigError(f"autoassociative.hidden_size must be >= 1, got {self.hidden_size}")


@dataclass(frozen=True)
class PipelineConfig:
    """
    End-to-end run description.

    Mode contract:
    - bounded: imputer column_mean (default) or zero_fill; time transform only
    - flexibly_bounded: correlation_machine imputer; any transform
    """

    mode: PipelineMode = PipelineMode.FLEXIBLY_BOUNDED
    transform: FeatureDomain = FeatureDomain.TIME
    feature_params: FeatureParams = field(default_factory=FeatureParams)
    imputer: Optional[ImputationMethod] = None
    model: ModelSpec = field(default_factory=ModelSpec)
    autoassociative: AutoassociativeSpec = field(default_factory=AutoassociativeSpec)
    ga: GaConfig = field(default_factory=GaConfig)
    train_fraction: float = defaults.TRAIN_FRACTION
    seed: int = 0
    missing_tokens: FrozenSet[str] = defaults.MISSING_TOKENS
    utility: Optional[UtilitySpec] = None
    max_workers: int = 1

    def __post_init__(self) -> None:
        mode = parse_enum(PipelineMode, self.mode, "mode")
        transform = parse_enum(FeatureDomain, self.transform, "transform.domain")
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "transform", transform)
        object.__setattr__(self, "missing_tokens", frozenset(self.missing_tokens))

        if self.imputer is None:
            imputer = (
                ImputationMethod.COLUMN_MEAN
                if mode is PipelineMode.BOUNDED
                else ImputationMethod.CORRELATION_MACHINE
            )
        else:
            imputer = parse_enum(ImputationMethod, self.imputer, "imputer")
        object.__setattr__(self, "imputer", imputer)

        if mode is PipelineMode.BOUNDED:
            if imputer not in BOUNDED_IMPUTERS:
                raise ConfigError(f"bounded mode cannot use the {imputer.value} imputer")
            if transform is not FeatureDomain.TIME:
                raise ConfigError(f"bounded mode uses time-domain features only, got {transform.value}")
        elif imputer is not ImputationMethod.CORRELATION_MACHINE:
            raise ConfigError(f"flexibly_bounded mode needs the correlation_machine imputer, got {imputer.value}")

        if not 0.0 < self.train_fraction < 1.0:
            raise ConfigError(f"train_fraction must lie in (0, 1), got {self.train_fraction}")
        if self.seed < 0:
            raise ConfigError(f"seed must be unsigned, got {self.seed}")
        if self.max_workers < 1:
            raise ConfigError(f"max_workers must be >= 1, got {self.max_workers}")

    def with_seed(self, seed: int) -> "PipelineConfig":
        """Create a copy with another root seed."""
        return replace(self, seed=seed)

    def as_mode(self, mode: PipelineMode) -> "PipelineConfig":
        """
        Derive the same run in another mode.

        Bounded variants fall back to column-mean imputation and time-domain
        features; flexibly-bounded variants switch to the correlation machine.
        """
        mode = parse_enum(PipelineMode, mode, "mode")
        if mode is self.mode:
            return self
        if mode is PipelineMode.BOUNDED:
            return replace(
                self,
                mode=mode,
                imputer=ImputationMethod.COLUMN_MEAN,
                transform=FeatureDomain.TIME,
            )
        return replace(self, mode=mode, imputer=ImputationMethod.CORRELATION_MACHINE)

    def to_dict(self) -> dict:
        """Serialize the settings that shape results."""
        return {
            "mode": self.mode.value,
            "transform": {"domain": self.transform.value, **self.feature_params.to_dict()},
            "imputer": self.imputer.value,
            "model": {
                "train": self.model.train.to_dict(),
                "hidden_sizes": None if self.model.hidden_sizes is None else list(self.model.hidden_sizes),
                "task": self.model.task.value,
            },
            "autoassociative": {
                "train": self.autoassociative.train.to_dict(),
                "hidden_size": self.autoassociative.hidden_size,
            },
            "ga": self.ga.to_dict(),
            "train_fraction": self.train_fraction,
            "seed": self.seed,
        }
