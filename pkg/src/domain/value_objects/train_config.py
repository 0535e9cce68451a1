"""
Training configuration and report value objects.
"""
from dataclasses import dataclass, field, replace
from typing import Tuple

from domain.exceptions import ConfigError


@dataclass(frozen=True)
class TrainConfig:
    """
    Mini-batch gradient descent settings.

    `early_stop_tol` of 0 disables early stopping; a positive value stops
    training once an epoch improves the loss by less than the tolerance.
    """

    learning_rate: float = 0.5
    epochs: int = 2000
    batch_size: int = 32
    seed: int = 0
    init_scale: float = 0.5
    early_stop_tol: float = 0.0

    def __post_init__(self) -> None:
        if not self.learning_rate >= 0.0:
            raise ConfigError(f"learning_rate must be non-negative, got {self.learning_rate}")
        if self.epochs < 1:
            raise ConfigError(f"epochs must be >= 1, got {self.epochs}")
        if self.batch_size < 1:
            raise ConfigError(f"batch_size must be >= 1, got {self.batch_size}")
        if self.seed < 0:
            raise ConfigError(f"seed must be unsigned, got {self.seed}")
        if not self.init_scale > 0.0:
            raise ConfigError(f"init_scale must be positive, got {self.init_scale}")
        if not self.early_stop_tol >= 0.0:
            raise ConfigError(f"early_stop_tol must be non-negative, got {self.early_stop_tol}")

    def with_seed(self, seed: int) -> "TrainConfig":
        """Create a copy with another seed."""
        return replace(self, seed=seed)

    def with_batch_size(self, batch_size: int) -> "TrainConfig":
        """Create a copy with another batch size."""
        return replace(self, batch_size=batch_size)

    def to_dict(self) -> dict:
        """Serialize for reports."""
        return {
            "learning_rate": self.learning_rate,
            "epochs": self.epochs,
            "batch_size": self.batch_size,
            "seed": self.seed,
            "init_scale": self.init_scale,
            "early_stop_tol": self.early_stop_tol,
        }


@dataclass(frozen=True)
class TrainReport:
    """Per-epoch mean loss trace of one training run."""

    loss_trace: Tuple[float, ...] = field(default_factory=tuple)

    @property
    def epochs_run(self) -> int:
        """Number of completed epochs."""
        return len(self.loss_trace)

    @property
    def final_loss(self) -> float:
        """Loss after the last epoch (NaN when nothing ran)."""
        return self.loss_trace[-1] if self.loss_trace else float("nan")

    def to_dict(self) -> dict:
        """Serialize for reports."""
        return {
            "epochs_run": self.epochs_run,
            "final_loss": self.final_loss,
            "loss_trace": list(self.loss_trace),
        }
