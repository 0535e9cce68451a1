"""
Imputer implementations.

ColumnMeanImputer and ZeroFillImputer are the bounded baselines;
CorrelationMachineImputer is the autoassociative network + GA estimator.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Tuple

import numpy as np

from application import data_preparation
from application.correlation_machine import impute_row, reconstruction_error
from domain.entities.dataset import Dataset
from domain.entities.mlp_params import MlpParams
from domain.exceptions import ConfigError, DataError
from domain.interfaces.i_imputer import IImputer
from domain.value_objects.ga_config import GaConfig
from domain.value_objects.imputation import FilledCell, ImputationResult
from domain.value_objects.imputation_method import ImputationMethod
from domain.value_objects.normalization_params import NormalizationParams

logger = logging.getLogger(__name__)


def _complete(dataset: Dataset, fills: np.ndarray) -> Tuple[Dataset, Tuple[FilledCell, ...]]:
    """Write `fills` into the missing cells only; observed cells keep their bits."""
    missing = ~dataset.mask
    values = np.array(dataset.values, copy=True)
    values[missing] = fills[missing]
    cells = tuple(
        (int(r), int(c), float(values[r, c])) for r, c in np.argwhere(missing)
    )
    return dataset.with_values(values, np.ones(dataset.shape, dtype=bool)), cells


class ColumnMeanImputer(IImputer):
    """Fill each missing cell with its column's observed mean."""

    method = ImputationMethod.COLUMN_MEAN

    def impute(self, dataset: Dataset) -> ImputationResult:
        if dataset.is_complete():
            return ImputationResult.unchanged(dataset, self.method)
        data_preparation.fit_normalization(dataset)  # raises on unimputable columns
        masked = np.where(dataset.mask, dataset.values, 0.0)
        means = masked.sum(axis=0) / dataset.mask.sum(axis=0)
        completed, cells = _complete(dataset, np.broadcast_to(means, dataset.shape))
        logger.info("imputed method=%s cells=%d", self.method.value, len(cells))
        return ImputationResult(completed, cells, {}, self.method)


class ZeroFillImputer(IImputer):
    """Fill each missing cell with a literal 0.0."""

    method = ImputationMethod.ZERO_FILL

    def impute(self, dataset: Dataset) -> ImputationResult:
        if dataset.is_complete():
            return ImputationResult.unchanged(dataset, self.method)
        data_preparation.fit_normalization(dataset)
        completed, cells = _complete(dataset, np.zeros(dataset.shape))
        logger.info("imputed method=%s cells=%d", self.method.value, len(cells))
        return ImputationResult(completed, cells, {}, self.method)


class CorrelationMachineImputer(IImputer):
    """
    Autoassociative network + genetic algorithm imputer.

    Each incomplete row is searched independently in normalized space with
    its own GA seeded `ga.seed + row_index`, so concurrent and sequential
    runs give the same result. Filled values are denormalized and clipped to
    each column's observed range.
    """

    method = ImputationMethod.CORRELATION_MACHINE

    def __init__(
        self,
        net: MlpParams,
        ga: GaConfig,
        max_workers: int = 1,
        normalization: Optional[NormalizationParams] = None,
    ):
        """
        Initialize the imputer.

        Args:
            net: Trained autoassociative network (n_cols -> n_cols)
            ga: GA template; bounds and seed are set per row
            max_workers: Rows imputed concurrently
            normalization: Scaling the net was trained under
        """
        if net.input_size != net.output_size:
            raise ConfigError(
                f"autoassociative net must map {net.input_size} -> {net.input_size}, "
                f"got output width {net.output_size}"
            )
        self.net = net
        self.ga = ga
        self.max_workers = max_workers
        self.normalization = normalization

    def impute(self, dataset: Dataset) -> ImputationResult:
        if dataset.is_complete():
            return ImputationResult.unchanged(dataset, self.method)
        if self.net.input_size != dataset.n_cols:
            raise DataError(
                f"net width {self.net.input_size} differs from dataset width {dataset.n_cols}"
            )

        observed_params = data_preparation.fit_normalization(dataset)
        params = self.normalization or observed_params
        normalized = data_preparation.normalize(dataset, params)
        rows = [int(r) for r in dataset.incomplete_rows()]

        def search(row: int) -> np.ndarray:
            ga = self.ga.with_seed(self.ga.seed + row)
            return impute_row(self.net, normalized.values[row], dataset.mask[row], ga)

        logger.info("correlation machine rows=%d workers=%d", len(rows), self.max_workers)
        if self.max_workers > 1:
            with ThreadPoolExecutor(max_workers=self.max_workers) as pool:
                completed_rows: List[np.ndarray] = list(pool.map(search, rows))
        else:
            completed_rows = [search(r) for r in rows]

        row_errors: Dict[int, float] = {}
        normalized_fills = np.array(normalized.values, copy=True)
        for row, completed_row in zip(rows, completed_rows):
            normalized_fills[row] = completed_row
            row_errors[row] = reconstruction_error(self.net, completed_row)

        fills = data_preparation.denormalize_values(normalized_fills, params)
        fills = np.clip(fills, observed_params.minimums, observed_params.maximums)
        completed, cells = _complete(dataset, fills)
        logger.info("imputed method=%s cells=%d", self.method.value, len(cells))
        return ImputationResult(completed, cells, row_errors, self.method)
