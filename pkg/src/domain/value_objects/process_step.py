"""
Decision-process step value objects.

A step is one action in a decision process, tagged rational or irrational
and weighted by its impact (power) on the decision.
"""
import math

from domain.exceptions import ConfigError
from domain.value_objects.enum_parsing import parse_enum
from domain.value_objects.step_kind import StepKind


class RationalityCriteria:
    """
    The three ingredients of a rational step.

    A step is rational only when it is logical, grounded in evidence and
    optimized; failing any one makes it irrational.
    """

    def __init__(self, logical: bool, evidence_based: bool, optimized: bool) -> None:
        """
        Initialize criteria.

        Args:
            logical: Step follows from sound reasoning
            evidence_based: Step is premised on information
            optimized: Step does not waste resources
        """
        self._logical = bool(logical)
        self._evidence_based = bool(evidence_based)
        self._optimized = bool(optimized)

    @property
    def logical(self) -> bool:
        """Get logic criterion."""
        return self._logical

    @property
    def evidence_based(self) -> bool:
        """Get information criterion."""
        return self._evidence_based

    @property
    def optimized(self) -> bool:
        """Get optimization criterion."""
        return self._optimized

    def all_met(self) -> bool:
        """Check whether every criterion holds."""
        return self._logical and self._evidence_based and self._optimized

    def kind(self) -> StepKind:
        """Get RATIONAL when every criterion holds, IRRATIONAL otherwise."""
        return StepKind.RATIONAL if self.all_met() else StepKind.IRRATIONAL

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalityCriteria):
            return False
        return (self._logical, self._evidence_based, self._optimized) == (
            other.logical,
            other.evidence_based,
            other.optimized,
        )

    def __hash__(self) -> int:
        return hash((self._logical, self._evidence_based, self._optimized))

    def __repr__(self) -> str:
        return (
            f"RationalityCriteria(logical={self._logical}, "
            f"evidence_based={self._evidence_based}, optimized={self._optimized})"
        )


class ProcessStep:
    """
    Immutable tagged step of a decision process.

    Invariant: power is finite and non-negative.
    """

    def __init__(self, label: str, kind, power: float) -> None:
        """
        Initialize step.

        Args:
            label: Human-readable step name
            kind: StepKind or its string value
            power: Dimensionless impact weight (>= 0)

        Raises:
            ConfigError: If kind is unknown or power is negative/non-finite
        """
        power = float(power)
        if not math.isfinite(power) or power < 0.0:
            raise ConfigError(f"step '{label}': power must be finite and >= 0, got {power}")
        self._label = str(label)
        self._kind = parse_enum(StepKind, kind, f"step '{label}' kind")
        self._power = power

    @classmethod
    def from_criteria(cls, label: str, criteria: RationalityCriteria, power: float) -> "ProcessStep":
        """Build a step whose kind follows from the rationality criteria."""
        return cls(label, criteria.kind(), power)

    @property
    def label(self) -> str:
        """Get step label."""
        return self._label

    @property
    def kind(self) -> StepKind:
        """Get step kind."""
        return self._kind

    @property
    def power(self) -> float:
        """Get impact weight."""
        return self._power

    def is_rational(self) -> bool:
        """Check whether the step is tagged rational."""
        return self._kind is StepKind.RATIONAL

    def scaled(self, factor: float) -> "ProcessStep":
        """Create a copy with power multiplied by `factor`."""
        return ProcessStep(self._label, self._kind, self._power * factor)

    def to_dict(self) -> dict:
        """Serialize as {label, kind, power}."""
        return {"label": self._label, "kind": self._kind.value, "power": self._power}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProcessStep):
            return False
        return (self._label, self._kind, self._power) == (other.label, other.kind, other.power)

    def __hash__(self) -> int:
        return hash((self._label, self._kind, self._power))

    def __repr__(self) -> str:
        return f"ProcessStep(label={self._label!r}, kind={self._kind.value}, power={self._power})"
