"""
Dataset summary value objects.

Per-column statistics over observed cells, emitted as JSON.
"""
from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class ColumnSummary:
    """Observed-cell statistics of one column."""

    name: str
    observed: int
    missing: int
    mean: float
    minimum: float
    maximum: float

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "observed": self.observed,
            "missing": self.missing,
            "mean": self.mean,
            "min": self.minimum,
            "max": self.maximum,
        }


@dataclass(frozen=True)
class DatasetSummary:
    """Shape, missingness and per-column statistics."""

    n_rows: int
    n_cols: int
    missing_cells: int
    complete_rows: int
    columns: Tuple[ColumnSummary, ...]

    def to_dict(self) -> dict:
        return {
            "n_rows": self.n_rows,
            "n_cols": self.n_cols,
            "missing_cells": self.missing_cells,
            "complete_rows": self.complete_rows,
            "columns": [c.to_dict() for c in self.columns],
        }
