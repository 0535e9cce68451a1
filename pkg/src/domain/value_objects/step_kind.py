"""Process step kind enumeration."""
from enum import Enum


class StepKind(Enum):
    """Whether a decision-process step is rational or irrational."""

    RATIONAL = "rational"
    IRRATIONAL = "irrational"
