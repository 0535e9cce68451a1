"""
Spectral value objects: Spectrum and Spectrogram.
"""
from dataclasses import dataclass

import numpy as np

from domain.exceptions import ConfigError


@dataclass(frozen=True, eq=False)
class Spectrum:
    """
    Discrete Fourier coefficients of a length-n signal.

    For real input, coefficient k and n - k are complex conjugates.
    """

    coefficients: np.ndarray

    def __post_init__(self) -> None:
        coefficients = np.array(self.coefficients, dtype=np.complex128, copy=True).reshape(-1)
        coefficients.setflags(write=False)
        object.__setattr__(self, "coefficients", coefficients)

    def __len__(self) -> int:
        return self.coefficients.shape[0]

    def magnitudes(self) -> np.ndarray:
        """Get |X[k]| for every bin."""
        return np.abs(self.coefficients)

    def one_sided_magnitudes(self) -> np.ndarray:
        """Get |X[k]| for bins 0 .. n/2 (the non-redundant half of a real signal)."""
        return self.magnitudes()[: len(self) // 2 + 1]

    def energy(self) -> float:
        """Get (1/n) * sum |X[k]|^2, equal to the signal energy by Parseval."""
        return float(np.sum(np.abs(self.coefficients) ** 2) / len(self))

    def is_conjugate_symmetric(self, tolerance: float = 1e-9) -> bool:
        """Check X[k] == conj(X[n-k]) for 1 <= k < n."""
        n = len(self)
        if n < 2:
            return True
        head = self.coefficients[1:]
        tail = np.conj(self.coefficients[1:][::-1])
        return bool(np.max(np.abs(head - tail)) <= tolerance)

    def as_pairs(self):
        """List (re, im) tuples for serialization."""
        return [(float(c.real), float(c.imag)) for c in self.coefficients]


@dataclass(frozen=True, eq=False)
class Spectrogram:
    """
    Short-time magnitude spectra.

    One row per window position, one column per one-sided frequency bin.
    """

    frames: np.ndarray
    window_size: int
    hop: int

    def __post_init__(self) -> None:
        if self.window_size < 1 or self.hop < 1:
            raise ConfigError("window_size and hop must be positive")
        frames = np.array(self.frames, dtype=np.float64, copy=True)
        if frames.ndim != 2:
            raise ConfigError("frames must be a matrix")
        frames.setflags(write=False)
        object.__setattr__(self, "frames", frames)

    @property
    def frame_count(self) -> int:
        """Get number of window positions."""
        return self.frames.shape[0]

    @property
    def bin_count(self) -> int:
        """Get number of frequency bins per frame."""
        return self.frames.shape[1]

    @staticmethod
    def expected_frame_count(signal_length: int, window_size: int, hop: int) -> int:
        """floor((signal_length - window_size) / hop) + 1."""
        return (signal_length - window_size) // hop + 1

    def flatten(self) -> np.ndarray:
        """Get frames row by row as one feature vector."""
        return self.frames.reshape(-1).copy()
