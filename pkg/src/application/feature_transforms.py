"""
Signal-domain feature extractors.

Each transform turns one fully observed record into a real feature vector
whose length depends only on the record length and the parameters.
"""
import numpy as np

from application.signal_processing import (
    fft,
    haar_forward,
    next_power_of_two,
    stft,
)
from domain.exceptions import DataError
from domain.interfaces.i_feature_transform import IFeatureTransform
from domain.value_objects.spectrum import Spectrogram


def _zero_pad(row: np.ndarray) -> np.ndarray:
    padded = np.zeros(next_power_of_two(row.size))
    padded[:row.size] = row
    return padded


class TimeDomainTransform(IFeatureTransform):
    """Record used exactly as sampled."""

    def output_length(self, n: int) -> int:
        return n

    def transform_row(self, row: np.ndarray) -> np.ndarray:
        return np.array(row, dtype=np.float64, copy=True)


class FrequencyDomainTransform(IFeatureTransform):
    """One-sided FFT magnitudes of the record zero-padded to a power of two."""

    def output_length(self, n: int) -> int:
        return next_power_of_two(n) // 2 + 1

    def transform_row(self, row: np.ndarray) -> np.ndarray:
        return fft(_zero_pad(np.asarray(row, dtype=np.float64))).one_sided_magnitudes()


class TimeFrequencyTransform(IFeatureTransform):
    """
    Flattened Hann-windowed STFT magnitudes.

    The window must fit in the record: no padding is applied, so the frame
    grid follows the record exactly.
    """

    def __init__(self, window_size: int, hop: int) -> None:
        """
        Initialize transform.

        Args:
            window_size: STFT window length (power of two)
            hop: Samples between frames
        """
        self._window_size = window_size
        self._hop = hop

    def output_length(self, n: int) -> int:
        if self._window_size > n:
            raise DataError(f"window size {self._window_size} exceeds record length {n}")
        frames = Spectrogram.expected_frame_count(n, self._window_size, self._hop)
        return frames * (self._window_size // 2 + 1)

    def transform_row(self, row: np.ndarray) -> np.ndarray:
        return stft(row, self._window_size, self._hop).flatten()


class WaveletTransform(IFeatureTransform):
    """Full-depth Haar coefficients of the record zero-padded to a power of two."""

    def output_length(self, n: int) -> int:
        return max(next_power_of_two(n), 2)

    def transform_row(self, row: np.ndarray) -> np.ndarray:
        padded = _zero_pad(np.asarray(row, dtype=np.float64))
        if padded.size == 1:
            padded = np.append(padded, 0.0)
        levels = padded.size.bit_length() - 1
        return haar_forward(padded, levels).flatten()
