"""Imputation method enumeration."""
from enum import Enum


class ImputationMethod(Enum):
    """
    Missing-data estimators.

    CORRELATION_MACHINE is the flexibly-bounded estimator; the other two are
    bounded baselines that ignore inter-variable structure.
    """

    CORRELATION_MACHINE = "correlation_machine"
    COLUMN_MEAN = "column_mean"
    ZERO_FILL = "zero_fill"
