"""
Pipeline mode and decision task enumerations.

The mode fixes which imputer and transform families a run may use.
"""
from enum import Enum


class PipelineMode(Enum):
    """
    Rationality regime of a pipeline run.

    States:
        BOUNDED: column-mean (or zero) imputation, raw time-domain features
        FLEXIBLY_BOUNDED: correlation-machine imputation, any feature domain
    """

    BOUNDED = "bounded"
    FLEXIBLY_BOUNDED = "flexibly_bounded"


class DecisionTask(Enum):
    """
    What the decision machine predicts.

    AUTO picks CLASSIFICATION when every target value is 0 or 1.
    """

    AUTO = "auto"
    CLASSIFICATION = "classification"
    REGRESSION = "regression"
