"""
Normalization parameters value object.

Per-column min/max pairs, computed from observed cells only, that map
observed values into [0, 1].
"""
from dataclasses import dataclass

import numpy as np

from domain.exceptions import ConfigError


@dataclass(frozen=True, eq=False)
class NormalizationParams:
    """
    Immutable per-column (min, max) pairs.

    Invariant: min <= max for every column.
    """

    minimums: np.ndarray
    maximums: np.ndarray

    def __post_init__(self) -> None:
        minimums = np.array(self.minimums, dtype=np.float64, copy=True)
        maximums = np.array(self.maximums, dtype=np.float64, copy=True)
        if minimums.shape != maximums.shape or minimums.ndim != 1:
            raise ConfigError("minimums and maximums must be vectors of equal length")
        if (minimums > maximums).any():
            col = int(np.argmax(minimums > maximums))
            raise ConfigError(f"column {col}: min {minimums[col]} exceeds max {maximums[col]}")
        minimums.setflags(write=False)
        maximums.setflags(write=False)
        object.__setattr__(self, "minimums", minimums)
        object.__setattr__(self, "maximums", maximums)

    @property
    def n_cols(self) -> int:
        """Get column count."""
        return self.minimums.shape[0]

    @property
    def ranges(self) -> np.ndarray:
        """Get max - min per column."""
        return self.maximums - self.minimums

    def constant_columns(self) -> np.ndarray:
        """Get boolean flags for columns whose observed range is zero."""
        return self.ranges == 0.0

    def as_pairs(self):
        """List (min, max) tuples."""
        return [(float(lo), float(hi)) for lo, hi in zip(self.minimums, self.maximums)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NormalizationParams):
            return False
        return np.array_equal(self.minimums, other.minimums) and np.array_equal(
            self.maximums, other.maximums
        )

    __hash__ = None
