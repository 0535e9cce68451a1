"""
Wavelet decomposition value object.

Holds a multi-level orthonormal Haar decomposition: the coarsest
approximation plus one detail sequence per level.
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from domain.exceptions import DataError


@dataclass(frozen=True, eq=False)
class WaveletDecomposition:
    """
    Multi-level Haar coefficients.

    `details[0]` is the finest level (length n/2), `details[-1]` the coarsest
    (same length as `approximation`). Coefficient count equals input length.
    """

    approximation: np.ndarray
    details: Tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        approximation = np.array(self.approximation, dtype=np.float64, copy=True).reshape(-1)
        details = tuple(np.array(d, dtype=np.float64, copy=True).reshape(-1) for d in self.details)
        if not details:
            raise DataError("decomposition needs at least one detail level")
        for d in details:
            d.setflags(write=False)
        approximation.setflags(write=False)
        object.__setattr__(self, "approximation", approximation)
        object.__setattr__(self, "details", details)

    @property
    def levels(self) -> int:
        """Get number of decomposition levels."""
        return len(self.details)

    @property
    def signal_length(self) -> int:
        """Get length of the decomposed signal."""
        return self.coefficient_count()

    def coefficient_count(self) -> int:
        """Total coefficients across approximation and details."""
        return self.approximation.shape[0] + sum(d.shape[0] for d in self.details)

    def energy(self) -> float:
        """Sum of squared coefficients."""
        return float(
            np.sum(self.approximation ** 2) + sum(np.sum(d ** 2) for d in self.details)
        )

    def flatten(self) -> np.ndarray:
        """Approximation followed by details from coarsest to finest."""
        return np.concatenate([self.approximation, *reversed(self.details)])
