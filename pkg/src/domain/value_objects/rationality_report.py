"""
Rationality and information power reports.
"""
from dataclasses import dataclass

SATISFICING = "satisficing"
NOT_SATISFICING = "not_satisficing"


@dataclass(frozen=True)
class RationalityReport:
    """
    Outcome of the marginalization-of-irrationality assessment.

    ratio = rational_power / irrational_power (+inf when only rational
    power exists); marginalizable iff ratio > threshold, strictly.
    """

    rational_power: float
    irrational_power: float
    ratio: float
    threshold: float
    marginalizable: bool
    verdict: str

    def is_satisficing(self) -> bool:
        """Check the verdict."""
        return self.verdict == SATISFICING

    def to_dict(self) -> dict:
        """Serialize with the exact type field names."""
        return {
            "rational_power": self.rational_power,
            "irrational_power": self.irrational_power,
            "ratio": self.ratio,
            "threshold": self.threshold,
            "marginalizable": self.marginalizable,
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class InformationPowerReport:
    """
    Power of observed information against missing information.

    `marginalizable` tells whether ignoring the missing cells is acceptable
    (ratio > threshold).
    """

    observed_power: float
    missing_power: float
    ratio: float
    threshold: float = 1.0
    marginalizable: bool = True

    def to_dict(self) -> dict:
        """Serialize for reports."""
        return {
            "observed_power": self.observed_power,
            "missing_power": self.missing_power,
            "ratio": self.ratio,
            "threshold": self.threshold,
            "marginalizable": self.marginalizable,
        }
