"""
Expected-utility value objects: options, specs and decision outcomes.
"""
import math
from enum import Enum
from typing import Iterable, Optional, Sequence, Tuple

from domain.exceptions import ConfigError
from domain.value_objects.enum_parsing import parse_enum


class Objective(Enum):
    """What the optimization device does with option impacts."""

    MAXIMIZE_UTILITY = "maximize_utility"
    """Impacts are gains; expected utility = impact * probability."""

    MINIMIZE_LOSS = "minimize_loss"
    """Impacts are losses; expected utility = -impact * probability."""


class UtilityOption:
    """Immutable decision alternative with its impact and probability."""

    def __init__(self, label: str, impact: float, probability: float) -> None:
        """
        Initialize option.

        Args:
            label: Option name
            impact: Consequence value of the option
            probability: Chance the consequence occurs, in [0, 1]
        """
        impact = float(impact)
        probability = float(probability)
        if not math.isfinite(impact):
            raise ConfigError(f"option '{label}': impact must be finite")
        if not 0.0 <= probability <= 1.0:
            raise ConfigError(f"option '{label}': probability must lie in [0, 1], got {probability}")
        self._label = str(label)
        self._impact = impact
        self._probability = probability

    @property
    def label(self) -> str:
        """Get option label."""
        return self._label

    @property
    def impact(self) -> float:
        """Get impact."""
        return self._impact

    @property
    def probability(self) -> float:
        """Get probability of occurrence."""
        return self._probability

    def scaled(self, factor: float) -> "UtilityOption":
        """Create a copy with impact multiplied by `factor`."""
        return UtilityOption(self._label, self._impact * factor, self._probability)

    def to_dict(self) -> dict:
        """Serialize as {label, impact, probability}."""
        return {"label": self._label, "impact": self._impact, "probability": self._probability}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UtilityOption):
            return False
        return (self._label, self._impact, self._probability) == (
            other.label,
            other.impact,
            other.probability,
        )

    def __hash__(self) -> int:
        return hash((self._label, self._impact, self._probability))

    def __repr__(self) -> str:
        return (
            f"UtilityOption(label={self._label!r}, impact={self._impact}, "
            f"probability={self._probability})"
        )


class UtilitySpec:
    """
    Options over which expected utility is optimized.

    Probabilities need not sum to one: options are alternatives, not a
    distribution.
    """

    def __init__(self, options: Iterable[UtilityOption], objective=Objective.MAXIMIZE_UTILITY) -> None:
        """
        Initialize spec.

        Args:
            options: Non-empty sequence of alternatives
            objective: Objective or its string value

        Raises:
            ConfigError: If there are no options
        """
        options = tuple(options)
        if not options:
            raise ConfigError("utility spec needs at least one option")
        self._options = options
        self._objective = parse_enum(Objective, objective, "objective")

    @property
    def options(self) -> Tuple[UtilityOption, ...]:
        """Get alternatives in index order."""
        return self._options

    @property
    def objective(self) -> Objective:
        """Get optimization objective."""
        return self._objective

    def scaled(self, factor: float) -> "UtilitySpec":
        """Create a copy with every impact multiplied by `factor`."""
        return UtilitySpec((o.scaled(factor) for o in self._options), self._objective)

    def to_dict(self) -> dict:
        """Serialize as {objective, options}."""
        return {
            "objective": self._objective.value,
            "options": [o.to_dict() for o in self._options],
        }

    def __len__(self) -> int:
        return len(self._options)

    def __repr__(self) -> str:
        return f"UtilitySpec(options={len(self._options)}, objective={self._objective.value})"


class DecisionOutcome:
    """
    Chosen option with the expected utility of every option.

    Optionally carries the decision machine's per-row predictions.
    """

    def __init__(
        self,
        chosen_label: str,
        expected_utilities: Sequence[float],
        model_outputs: Optional[Sequence[Sequence[float]]] = None,
    ) -> None:
        self._chosen_label = chosen_label
        self._expected_utilities = tuple(float(u) for u in expected_utilities)
        self._model_outputs = (
            None if model_outputs is None else tuple(tuple(float(v) for v in row) for row in model_outputs)
        )

    @property
    def chosen_label(self) -> str:
        """Get the label of the chosen option."""
        return self._chosen_label

    @property
    def expected_utilities(self) -> Tuple[float, ...]:
        """Get expected utility per option."""
        return self._expected_utilities

    @property
    def model_outputs(self) -> Optional[Tuple[Tuple[float, ...], ...]]:
        """Get per-row model predictions, if attached."""
        return self._model_outputs

    def with_model_outputs(self, outputs: Sequence[Sequence[float]]) -> "DecisionOutcome":
        """Create a copy carrying model predictions."""
        return DecisionOutcome(self._chosen_label, self._expected_utilities, outputs)

    def to_dict(self) -> dict:
        """Serialize for reports."""
        data = {
            "chosen_label": self._chosen_label,
            "expected_utilities": list(self._expected_utilities),
        }
        if self._model_outputs is not None:
            data["model_outputs"] = [list(row) for row in self._model_outputs]
        return data

    def __repr__(self) -> str:
        return f"DecisionOutcome(chosen_label={self._chosen_label!r})"
