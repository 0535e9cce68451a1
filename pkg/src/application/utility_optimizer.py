"""
Rational-choice optimization device: pick the option of highest expected utility.
"""
import logging

import numpy as np

from domain.value_objects.utility import DecisionOutcome, Objective, UtilitySpec

logger = logging.getLogger(__name__)


def expected_utilities(spec: UtilitySpec) -> np.ndarray:
    """
    Impact times probability per option.

    Under the minimize_loss objective impacts are losses and the sign flips,
    so the best option is still the argmax.
    """
    sign = -1.0 if spec.objective is Objective.MINIMIZE_LOSS else 1.0
    return np.array([sign * o.impact * o.probability for o in spec.options])


def choose_rational(spec: UtilitySpec) -> DecisionOutcome:
    """
    Choose the option maximizing expected utility.

    Ties go to the lowest option index.

    Args:
        spec: Non-empty set of alternatives

    Returns:
        DecisionOutcome with the expected utility of every option
    """
    utilities = expected_utilities(spec)
    chosen = int(np.argmax(utilities))
    label = spec.options[chosen].label
    logger.info("chose option=%s utility=%.6g of %d", label, utilities[chosen], len(spec))
    return DecisionOutcome(label, utilities.tolist())
