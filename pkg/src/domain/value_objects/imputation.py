"""
Imputation value objects: what to run and what it produced.
"""
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from domain.entities.dataset import Dataset
from domain.entities.mlp_params import MlpParams
from domain.exceptions import ConfigError
from domain.value_objects.enum_parsing import parse_enum
from domain.value_objects.ga_config import GaConfig
from domain.value_objects.imputation_method import ImputationMethod
from domain.value_objects.normalization_params import NormalizationParams

FilledCell = Tuple[int, int, float]


@dataclass(frozen=True, eq=False)
class ImputerSpec:
    """
    Imputer selection.

    The correlation machine needs a trained autoassociative net whose
    input width equals the dataset's column count; `ga` is a template
    whose bounds are derived per row. `normalization` is the scaling the
    net was trained under; when absent it is fitted on the dataset.
    """

    method: ImputationMethod = ImputationMethod.COLUMN_MEAN
    net: Optional[MlpParams] = None
    ga: GaConfig = field(default_factory=GaConfig)
    max_workers: int = 1
    normalization: Optional[NormalizationParams] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "method", parse_enum(ImputationMethod, self.method, "imputer.method"))
        if self.method is ImputationMethod.CORRELATION_MACHINE and self.net is None:
            raise ConfigError("correlation_machine imputer needs a trained autoassociative net")
        if self.max_workers < 1:
            raise ConfigError(f"max_workers must be >= 1, got {self.max_workers}")


@dataclass(frozen=True, eq=False)
class ImputationResult:
    """
    Completed dataset and the cells that were filled.

    Observed cells of the input are carried over bit-exactly. `row_errors`
    maps each imputed row to its final reconstruction error and is empty
    for imputers that do not reconstruct.
    """

    completed: Dataset
    filled_cells: Tuple[FilledCell, ...]
    row_errors: Dict[int, float]
    method: ImputationMethod

    @classmethod
    def unchanged(cls, dataset: Dataset, method: ImputationMethod) -> "ImputationResult":
        """Result for a dataset with nothing to fill."""
        return cls(dataset, (), {}, method)

    def to_dict(self, seed: Optional[int] = None) -> dict:
        """Serialize as {method, seed, filled_cells, row_errors}."""
        return {
            "method": self.method.value,
            "seed": seed,
            "filled_cells": [
                {"row": row, "column": self.completed.column_names[col], "value": value}
                for row, col, value in self.filled_cells
            ],
            "row_errors": {str(row): err for row, err in sorted(self.row_errors.items())},
        }
