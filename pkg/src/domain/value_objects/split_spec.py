"""
Split specification value object.

Describes a seeded train/test partition of dataset rows.
"""
from domain.exceptions import ConfigError


class SplitSpec:
    """
    Immutable train/test split description.

    The partition it produces is disjoint and covers all rows.
    """

    def __init__(self, train_fraction: float = 0.8, seed: int = 0) -> None:
        """
        Initialize split spec.

        Args:
            train_fraction: Share of rows used for training, in (0, 1)
            seed: Unsigned shuffle seed

        Raises:
            ConfigError: If fraction or seed is out of range
        """
        if not 0.0 < float(train_fraction) < 1.0:
            raise ConfigError(f"train_fraction must lie in (0, 1), got {train_fraction}")
        if int(seed) < 0:
            raise ConfigError(f"seed must be unsigned, got {seed}")
        self._train_fraction = float(train_fraction)
        self._seed = int(seed)

    @property
    def train_fraction(self) -> float:
        """Get training share."""
        return self._train_fraction

    @property
    def seed(self) -> int:
        """Get shuffle seed."""
        return self._seed

    def with_seed(self, seed: int) -> "SplitSpec":
        """Create a copy with another seed."""
        return SplitSpec(self._train_fraction, seed)

    def __eq__(self, other: object) -> bool:
        """Check equality with another spec."""
        if not isinstance(other, SplitSpec):
            return False
        return self._train_fraction == other.train_fraction and self._seed == other.seed

    def __hash__(self) -> int:
        """Make SplitSpec hashable."""
        return hash((self._train_fraction, self._seed))

    def __repr__(self) -> str:
        """String representation for debugging."""
        return f"SplitSpec(train_fraction={self._train_fraction}, seed={self._seed})"
