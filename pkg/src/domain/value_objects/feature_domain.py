"""
Feature domain enumeration.

Selects how a record is presented to the decision machine.
"""
from enum import Enum


class FeatureDomain(Enum):
    """
    Signal domains available to the feature extractor.

    Values are the names used in JSON configs and on the command line.
    """

    TIME = "time"
    """Record used exactly as sampled (identity)."""

    FREQUENCY = "frequency"
    """Magnitude spectrum of the zero-padded record."""

    TIME_FREQUENCY = "time-frequency"
    """Flattened short-time Fourier magnitudes."""

    WAVELET = "wavelet"
    """Full-depth orthonormal Haar coefficients of the zero-padded record."""
