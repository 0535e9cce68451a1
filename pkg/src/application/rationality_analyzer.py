"""
Marginalization of irrationality.

A decision process is outlined as tagged steps, each weighted by its
power. The ratio of rational to irrational power decides whether the
irrational part is marginalizable, and so whether the outcome is
satisficing. The same ratio applied to observed and missing cells tells
whether missing information can simply be ignored.
"""
import logging
import math
from typing import Optional, Sequence, Tuple

import numpy as np

from application import defaults
from domain.entities.dataset import Dataset
from domain.entities.decision_process import DecisionProcess
from domain.exceptions import ConfigError, DataError
from domain.value_objects.process_step import RationalityCriteria
from domain.value_objects.rationality_report import (
    NOT_SATISFICING,
    SATISFICING,
    InformationPowerReport,
    RationalityReport,
)
from domain.value_objects.step_kind import StepKind

logger = logging.getLogger(__name__)


def classify_step(criteria: RationalityCriteria) -> StepKind:
    """Rational iff the step is logical, evidence-based and optimized."""
    return criteria.kind()


def is_process_rational(process: DecisionProcess) -> bool:
    """
    Check rationality of the process as a whole.

    Rationality is indivisible: one irrational step makes the process
    irrational, however small its power.
    """
    return not process.irrational_steps()


def aggregate_powers(process: DecisionProcess) -> Tuple[float, float]:
    """
    Sum step powers by kind.

    Sums are exactly rounded, so step order never changes them.

    Returns:
        (rational_power, irrational_power)
    """
    rational = math.fsum(s.power for s in process.rational_steps())
    irrational = math.fsum(s.power for s in process.irrational_steps())
    return rational, irrational


def rationality_ratio(rational_power: float, irrational_power: float) -> float:
    """
    Rational power over irrational power.

    Returns:
        The ratio, or +inf when only rational power exists

    Raises:
        ConfigError: If a power is negative or both are zero
    """
    if rational_power < 0.0 or irrational_power < 0.0:
        raise ConfigError(
            f"powers must be >= 0, got rational={rational_power}, irrational={irrational_power}"
        )
    if rational_power == 0.0 and irrational_power == 0.0:
        raise ConfigError("invalid process: rational and irrational power are both zero")
    if irrational_power == 0.0:
        return math.inf
    return rational_power / irrational_power


def _check_threshold(threshold: float) -> float:
    threshold = float(threshold)
    if not (math.isfinite(threshold) and threshold > 0.0):
        raise ConfigError(f"threshold must be a positive real, got {threshold}")
    return threshold


def assess_satisficing(
    process: DecisionProcess,
    threshold: float = defaults.SATISFICING_THRESHOLD,
) -> RationalityReport:
    """
    Decide whether the irrational steps are marginalizable.

    The irrational part is marginalizable only when the ratio strictly
    exceeds the threshold; a ratio equal to the threshold is not satisficing.

    Args:
        process: Outlined and tagged decision process
        threshold: Positive ratio the rational power must exceed

    Returns:
        RationalityReport

    Raises:
        ConfigError: If the threshold is not positive or both powers are zero
    """
    threshold = _check_threshold(threshold)
    rational, irrational = aggregate_powers(process)
    ratio = rationality_ratio(rational, irrational)
    marginalizable = ratio > threshold
    report = RationalityReport(
        rational_power=rational,
        irrational_power=irrational,
        ratio=ratio,
        threshold=threshold,
        marginalizable=marginalizable,
        verdict=SATISFICING if marginalizable else NOT_SATISFICING,
    )
    logger.info("process=%s ratio=%.6g verdict=%s", process.name, ratio, report.verdict)
    return report


def information_power_ratio(
    dataset: Dataset,
    weights: Optional[Sequence[float]] = None,
    threshold: float = defaults.INFORMATION_THRESHOLD,
) -> InformationPowerReport:
    """
    Power of observed cells against missing cells.

    Unweighted, each cell counts 1; with weights, each cell counts its
    column's weight.

    Args:
        dataset: Dataset with at least one cell
        weights: Optional positive weight per column
        threshold: Ratio above which the missing part may be ignored

    Returns:
        InformationPowerReport

    Raises:
        DataError: If the dataset has no cells
        ConfigError: If weights do not match the columns or are not positive
    """
    threshold = _check_threshold(threshold)
    if dataset.n_rows * dataset.n_cols == 0:
        raise DataError("dataset has no cells")
    if weights is None:
        column_weights = np.ones(dataset.n_cols)
    else:
        column_weights = np.asarray(weights, dtype=np.float64).reshape(-1)
        if column_weights.size != dataset.n_cols:
            raise ConfigError(
                f"{column_weights.size} weight(s) for {dataset.n_cols} column(s)"
            )
        if not (np.isfinite(column_weights).all() and (column_weights > 0.0).all()):
            raise ConfigError("column weights must be finite and positive")

    observed_counts = dataset.mask.sum(axis=0)
    missing_counts = dataset.n_rows - observed_counts
    observed = math.fsum(column_weights * observed_counts)
    missing = math.fsum(column_weights * missing_counts)
    ratio = rationality_ratio(observed, missing)
    return InformationPowerReport(
        observed_power=observed,
        missing_power=missing,
        ratio=ratio,
        threshold=threshold,
        marginalizable=ratio > threshold,
    )
