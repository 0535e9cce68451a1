"""
Pipeline run and mode-comparison reports.
"""
from dataclasses import dataclass
from typing import Optional

from application.pipeline_config import PipelineConfig
from application.pipeline_mode import DecisionTask
from domain.entities.mlp_params import MlpParams
from domain.value_objects.imputation import ImputationResult
from domain.value_objects.rationality_report import InformationPowerReport
from domain.value_objects.train_config import TrainReport
from domain.value_objects.utility import DecisionOutcome

ACCURACY = "accuracy"
MSE = "mse"

FIRST = "first"
SECOND = "second"
TIE = "tie"


@dataclass(frozen=True, eq=False)
class PipelineReport:
    """
    Everything one pipeline run produced.

    `model` is the trained decision machine; it is persisted separately
    and left out of `to_dict`.
    """

    config: PipelineConfig
    target_column: str
    task: DecisionTask
    information: InformationPowerReport
    imputation: ImputationResult
    imputation_seed: Optional[int]
    autoassociative_train: Optional[TrainReport]
    feature_count: int
    n_train: int
    n_test: int
    train: TrainReport
    metric: str
    test_metric: float
    model: MlpParams
    decision: Optional[DecisionOutcome] = None

    @property
    def mode(self):
        """Get the run's pipeline mode."""
        return self.config.mode

    @property
    def seed(self) -> int:
        """Get the run's root seed."""
        return self.config.seed

    def to_dict(self) -> dict:
        """Serialize as {mode, seed, ..., imputation, train, test_metric}."""
        data = {
            "mode": self.mode.value,
            "seed": self.seed,
            "target_column": self.target_column,
            "task": self.task.value,
            "transform": self.config.transform.value,
            "information_power": self.information.to_dict(),
            "imputation": self.imputation.to_dict(self.imputation_seed),
            "autoassociative_train": (
                None if self.autoassociative_train is None else self.autoassociative_train.to_dict()
            ),
            "feature_count": self.feature_count,
            "n_train": self.n_train,
            "n_test": self.n_test,
            "train": self.train.to_dict(),
            "metric": self.metric,
            "test_metric": self.test_metric,
            "config": self.config.to_dict(),
        }
        if self.decision is not None:
            data["decision"] = self.decision.to_dict()
        return data


@dataclass(frozen=True, eq=False)
class ComparisonReport:
    """
    Side-by-side results of two runs on the same data and seed.

    delta = second.test_metric - first.test_metric. The winner is the run
    with higher accuracy (classification) or lower MSE (regression).
    """

    first: PipelineReport
    second: PipelineReport

    @property
    def metric(self) -> str:
        """Get the shared metric name."""
        return self.first.metric

    @property
    def delta(self) -> float:
        """Get second minus first test metric."""
        return self.second.test_metric - self.first.test_metric

    @property
    def winner(self) -> str:
        """Get 'first', 'second' or 'tie'."""
        delta = self.delta
        if delta == 0.0:
            return TIE
        second_better = delta > 0.0 if self.metric == ACCURACY else delta < 0.0
        return SECOND if second_better else FIRST

    @property
    def winning_mode(self) -> Optional[str]:
        """Get the winning run's mode value, None on a tie."""
        winner = self.winner
        if winner == TIE:
            return None
        return (self.first if winner == FIRST else self.second).mode.value

    def to_dict(self) -> dict:
        """Serialize both runs with the delta and winner."""
        return {
            "metric": self.metric,
            "first": self.first.to_dict(),
            "second": self.second.to_dict(),
            "delta": self.delta,
            "winner": self.winner,
            "winning_mode": self.winning_mode,
        }
