"""
Correlation machine: autoassociative reconstruction error and per-row
GA search over missing coordinates.
"""
import numpy as np

from application import genetic_algorithm, neural_network
from domain.entities.mlp_params import MlpParams
from domain.exceptions import DataError
from domain.value_objects.ga_config import GaConfig


def reconstruction_error(net: MlpParams, x) -> float:
    """
    Squared Euclidean distance between x and its reconstruction.

    Raises:
        DataError: If len(x) differs from the net input width
    """
    vector = np.asarray(x, dtype=np.float64).reshape(-1)
    residual = vector - neural_network.forward(net, vector)
    return float(np.sum(residual ** 2))


def reconstruction_errors(net: MlpParams, rows: np.ndarray) -> np.ndarray:
    """Row-wise `reconstruction_error` for a matrix of candidates."""
    rows = np.asarray(rows, dtype=np.float64)
    residual = rows - neural_network.forward_batch(net, rows)
    return np.sum(residual ** 2, axis=1)


def impute_row(net: MlpParams, row, observed_mask, ga: GaConfig) -> np.ndarray:
    """
    Complete one normalized row by minimizing reconstruction error.

    The genome holds the missing coordinates only, each bounded to [0, 1].
    Observed coordinates are copied through untouched.

    Args:
        net: Trained autoassociative network
        row: Normalized row; missing entries may hold anything
        observed_mask: True where the row is observed
        ga: GA template; its bounds are replaced

    Returns:
        Completed row

    Raises:
        DataError: On width mismatch or when nothing is missing
    """
    row = np.array(row, dtype=np.float64).reshape(-1)
    observed = np.asarray(observed_mask, dtype=bool).reshape(-1)
    if row.size != net.input_size or observed.size != row.size:
        raise DataError(
            f"row of length {row.size} with mask of length {observed.size} "
            f"does not fit a net of width {net.input_size}"
        )
    missing = np.flatnonzero(~observed)
    if missing.size == 0:
        raise DataError("row is fully observed; nothing to impute")

    template = row.copy()
    template[missing] = 0.0

    def population_fitness(genomes: np.ndarray) -> np.ndarray:
        candidates = np.tile(template, (genomes.shape[0], 1))
        candidates[:, missing] = genomes
        return reconstruction_errors(net, candidates)

    report = genetic_algorithm.run_batch(
        population_fitness,
        ga.with_bounds([(0.0, 1.0)] * missing.size),
    )
    completed = row.copy()
    completed[missing] = report.best_genome
    return completed
