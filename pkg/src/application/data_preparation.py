"""
Dataset preparation: min-max normalization, seeded splitting, summaries.

All functions are pure: they read immutable datasets and return new ones.
Only observed cells are ever read or written.
"""
import logging
import math
from typing import Tuple

import numpy as np

from domain.entities.dataset import Dataset
from domain.exceptions import DataError
from domain.value_objects.dataset_summary import ColumnSummary, DatasetSummary
from domain.value_objects.normalization_params import NormalizationParams
from domain.value_objects.split_spec import SplitSpec

logger = logging.getLogger(__name__)

# Value assigned to every cell of a zero-range column
CONSTANT_COLUMN_LEVEL = 0.5


def fit_normalization(dataset: Dataset) -> NormalizationParams:
    """
    Compute per-column min/max over observed cells.

    Args:
        dataset: Dataset with at least one observed cell per column

    Returns:
        NormalizationParams

    Raises:
        DataError: If a column has no observed cell (unimputable column)
    """
    observed_counts = dataset.mask.sum(axis=0)
    empty = np.flatnonzero(observed_counts == 0)
    if empty.size:
        name = dataset.column_names[empty[0]]
        raise DataError(f"column '{name}' has no observed cells and cannot be imputed")

    masked = np.where(dataset.mask, dataset.values, np.nan)
    return NormalizationParams(np.nanmin(masked, axis=0), np.nanmax(masked, axis=0))


def _check_shape(dataset: Dataset, params: NormalizationParams) -> None:
    if dataset.n_cols != params.n_cols:
        raise DataError(
            f"dataset has {dataset.n_cols} column(s), normalization expects {params.n_cols}"
        )


def normalize(dataset: Dataset, params: NormalizationParams) -> Dataset:
    """
    Map observed cells to (v - min) / (max - min).

    Constant columns map to 0.5. The mask is unchanged.

    Raises:
        DataError: On column-count mismatch
    """
    _check_shape(dataset, params)
    ranges = params.ranges
    constant = params.constant_columns()
    safe_ranges = np.where(constant, 1.0, ranges)
    scaled = (dataset.values - params.minimums) / safe_ranges
    scaled = np.where(constant, CONSTANT_COLUMN_LEVEL, scaled)
    return dataset.with_values(scaled)


def denormalize(dataset: Dataset, params: NormalizationParams) -> Dataset:
    """
    Inverse of `normalize` on observed cells.

    Constant columns map back to their single observed value.

    Raises:
        DataError: On column-count mismatch
    """
    _check_shape(dataset, params)
    restored = dataset.values * params.ranges + params.minimums
    restored = np.where(params.constant_columns(), params.minimums, restored)
    return dataset.with_values(restored)


def denormalize_values(values: np.ndarray, params: NormalizationParams) -> np.ndarray:
    """
    Map normalized values back to column units, clipped to the observed range.

    Args:
        values: Matrix (or vector) in normalized units, one column per dataset column

    Returns:
        Values in column units within [min, max]
    """
    restored = np.asarray(values, dtype=np.float64) * params.ranges + params.minimums
    restored = np.where(params.constant_columns(), params.minimums, restored)
    return np.clip(restored, params.minimums, params.maximums)


def split_indices(n_rows: int, spec: SplitSpec) -> Tuple[np.ndarray, np.ndarray]:
    """
    Seeded disjoint partition of row indices.

    The train share is round(train_fraction * n_rows), kept within
    [1, n_rows - 1] so both parts are non-empty. Indices are returned sorted.

    Raises:
        DataError: If there are fewer than two rows
    """
    if n_rows < 2:
        raise DataError(f"need at least 2 rows to split, got {n_rows}")
    n_train = int(math.floor(spec.train_fraction * n_rows + 0.5))
    n_train = min(max(n_train, 1), n_rows - 1)
    order = np.random.default_rng(spec.seed).permutation(n_rows)
    return np.sort(order[:n_train]), np.sort(order[n_train:])


def split(dataset: Dataset, spec: SplitSpec) -> Tuple[Dataset, Dataset]:
    """
    Split rows into (train, test) datasets, deterministically given the seed.

    Raises:
        DataError: If there are fewer than two rows
    """
    train_idx, test_idx = split_indices(dataset.n_rows, spec)
    logger.debug("split rows=%d train=%d test=%d seed=%d",
                 dataset.n_rows, train_idx.size, test_idx.size, spec.seed)
    return dataset.take_rows(train_idx), dataset.take_rows(test_idx)


def summarize(dataset: Dataset) -> DatasetSummary:
    """
    Describe shape, missingness and observed-cell statistics per column.

    Columns without observed cells report NaN statistics.
    """
    columns = []
    for j, name in enumerate(dataset.column_names):
        observed = dataset.values[dataset.mask[:, j], j]
        if observed.size:
            stats = (float(observed.mean()), float(observed.min()), float(observed.max()))
        else:
            stats = (math.nan, math.nan, math.nan)
        columns.append(
            ColumnSummary(
                name=name,
                observed=int(observed.size),
                missing=int(dataset.n_rows - observed.size),
                mean=stats[0],
                minimum=stats[1],
                maximum=stats[2],
            )
        )
    return DatasetSummary(
        n_rows=dataset.n_rows,
        n_cols=dataset.n_cols,
        missing_cells=dataset.missing_count(),
        complete_rows=int(dataset.complete_rows().size),
        columns=tuple(columns),
    )
