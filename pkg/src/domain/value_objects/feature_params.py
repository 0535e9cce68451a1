"""Feature extraction parameters."""
from domain.exceptions import ConfigError


class FeatureParams:
    """
    Immutable parameters of the time-frequency feature extractor.

    Ignored by the time, frequency and wavelet domains.
    """

    def __init__(self, window_size: int = 8, hop: int = 4) -> None:
        """
        Initialize feature params.

        Args:
            window_size: STFT window length, a power of two
            hop: Samples between consecutive windows
        """
        window_size = int(window_size)
        hop = int(hop)
        if window_size < 1 or window_size & (window_size - 1):
            raise ConfigError(f"window_size must be a power of two, got {window_size}")
        if hop < 1:
            raise ConfigError(f"hop must be >= 1, got {hop}")
        self._window_size = window_size
        self._hop = hop

    @property
    def window_size(self) -> int:
        """Get STFT window length."""
        return self._window_size

    @property
    def hop(self) -> int:
        """Get STFT hop."""
        return self._hop

    def to_dict(self) -> dict:
        """Serialize for reports."""
        return {"window_size": self._window_size, "hop": self._hop}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FeatureParams):
            return False
        return self._window_size == other.window_size and self._hop == other.hop

    def __hash__(self) -> int:
        return hash((self._window_size, self._hop))

    def __repr__(self) -> str:
        return f"FeatureParams(window_size={self._window_size}, hop={self._hop})"
