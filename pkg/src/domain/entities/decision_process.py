"""
Decision process entity.

The caller's outline of a process (the first two steps of the
marginalization procedure): a name and its tagged steps.
"""
from typing import Iterable, Tuple

from domain.exceptions import ConfigError
from domain.value_objects.process_step import ProcessStep


class DecisionProcess:
    """Named, non-empty sequence of process steps."""

    def __init__(self, name: str, steps: Iterable[ProcessStep]) -> None:
        """
        Initialize process.

        Args:
            name: Process name
            steps: At least one ProcessStep

        Raises:
            ConfigError: If there are no steps
        """
        steps = tuple(steps)
        if not steps:
            raise ConfigError(f"process '{name}' needs at least one step")
        self._name = str(name)
        self._steps = steps

    @property
    def name(self) -> str:
        """Get process name."""
        return self._name

    @property
    def steps(self) -> Tuple[ProcessStep, ...]:
        """Get steps in outline order."""
        return self._steps

    def rational_steps(self) -> Tuple[ProcessStep, ...]:
        """Get steps tagged rational."""
        return tuple(s for s in self._steps if s.is_rational())

    def irrational_steps(self) -> Tuple[ProcessStep, ...]:
        """Get steps tagged irrational."""
        return tuple(s for s in self._steps if not s.is_rational())

    def scaled(self, factor: float) -> "DecisionProcess":
        """Create a copy with every step's power multiplied by `factor`."""
        return DecisionProcess(self._name, (s.scaled(factor) for s in self._steps))

    def to_dict(self) -> dict:
        """Serialize as {name, steps}."""
        return {"name": self._name, "steps": [s.to_dict() for s in self._steps]}

    def __len__(self) -> int:
        return len(self._steps)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DecisionProcess):
            return False
        return self._name == other.name and self._steps == other.steps

    def __hash__(self) -> int:
        return hash((self._name, self._steps))

    def __repr__(self) -> str:
        return f"DecisionProcess(name={self._name!r}, steps={len(self._steps)})"
