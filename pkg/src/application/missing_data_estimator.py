"""
Missing-data estimation entry points.

Trains the correlation machine, completes datasets through the imputer
chosen by an ImputerSpec, and scores fills against known truth.
"""
import logging
from typing import Optional, Tuple

import numpy as np

from application import data_preparation, neural_network
from application.correlation_machine import impute_row, reconstruction_error
from domain.entities.dataset import Dataset
from domain.entities.mlp_params import MlpParams
from domain.exceptions import DataError
from domain.value_objects.imputation import ImputationResult, ImputerSpec
from domain.value_objects.normalization_params import NormalizationParams
from domain.value_objects.train_config import TrainConfig, TrainReport
from factories.imputer_factory import ImputerFactory

logger = logging.getLogger(__name__)

__all__ = [
    "evaluate_imputation",
    "fit_correlation_machine",
    "impute_dataset",
    "impute_row",
    "reconstruction_error",
]


def fit_correlation_machine(
    dataset: Dataset,
    config: TrainConfig,
    hidden_size: Optional[int] = None,
) -> Tuple[MlpParams, NormalizationParams, TrainReport]:
    """
    Train the autoassociative network on the dataset's complete rows.

    Normalization is fitted over every observed cell, so complete rows land
    in [0, 1] and the imputer can reuse the same scaling.

    Args:
        dataset: Dataset with at least one complete row
        config: Training settings (seed included)
        hidden_size: Bottleneck width; default max(2, round(0.75 * n_cols))

    Returns:
        (net, normalization, training report)

    Raises:
        DataError: If no row is complete or a column is unimputable
    """
    params = data_preparation.fit_normalization(dataset)
    complete = dataset.complete_rows()
    if complete.size == 0:
        raise DataError("no complete rows to train the correlation machine on")
    normalized = data_preparation.normalize(dataset.take_rows(complete), params)
    logger.info("training correlation machine rows=%d cols=%d", complete.size, dataset.n_cols)
    net, report = neural_network.train_autoassociative(normalized.values, config, hidden_size)
    return net, params, report


def impute_dataset(dataset: Dataset, spec: ImputerSpec) -> ImputationResult:
    """
    Fill every missing cell with the imputer named by `spec`.

    A dataset without missing cells comes back unchanged with no filled cells.

    Raises:
        DataError: If a column has no observed cell
    """
    if dataset.is_complete():
        return ImputationResult.unchanged(dataset, spec.method)
    return ImputerFactory.create(spec).impute(dataset)


def evaluate_imputation(truth: Dataset, result: ImputationResult, eval_mask) -> float:
    """
    Root-mean-square error over the cells marked in `eval_mask`.

    Args:
        truth: Dataset holding the true values of the hidden cells
        result: Imputation to score
        eval_mask: True for artificially hidden cells

    Returns:
        RMSE

    Raises:
        DataError: On an empty mask or shape mismatch
    """
    eval_mask = np.asarray(eval_mask, dtype=bool)
    if eval_mask.shape != truth.shape or result.completed.shape != truth.shape:
        raise DataError(
            f"shapes differ: truth {truth.shape}, result {result.completed.shape}, "
            f"mask {eval_mask.shape}"
        )
    if not eval_mask.any():
        raise DataError("evaluation mask selects no cell")
    if not truth.mask[eval_mask].all():
        raise DataError("evaluation mask selects cells without a known truth")
    errors = truth.values[eval_mask] - result.completed.values[eval_mask]
    return float(np.sqrt(np.mean(errors ** 2)))
