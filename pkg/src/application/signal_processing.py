"""
Frequency and time-frequency analysis.

Direct DFT (the reference), iterative radix-2 FFT, Hann-windowed STFT and the
orthonormal Haar wavelet transform.
"""
import numpy as np

from domain.exceptions import DataError
from domain.value_objects.spectrum import Spectrogram, Spectrum
from domain.value_objects.wavelet_decomposition import WaveletDecomposition


def is_power_of_two(n: int) -> bool:
    """Check n = 2^k for some k >= 0."""
    return n >= 1 and n & (n - 1) == 0


def next_power_of_two(n: int) -> int:
    """Smallest power of two >= n (n >= 1)."""
    return 1 << max(n - 1, 0).bit_length()


def _as_signal(x) -> np.ndarray:
    signal = np.asarray(x, dtype=np.float64).reshape(-1)
    if signal.size == 0:
        raise DataError("signal is empty")
    if not np.isfinite(signal).all():
        raise DataError("signal holds non-finite samples")
    return signal


def dft_brute(x) -> Spectrum:
    """
    Direct O(n^2) discrete Fourier transform.

    X[k] = sum_t x[t] * exp(-2*pi*i*k*t/n). The phase index k*t is reduced
    modulo n before scaling so large n keeps full precision.

    Raises:
        DataError: On empty or non-finite input
    """
    signal = _as_signal(x)
    n = signal.size
    index = np.arange(n)
    phase = np.outer(index, index) % n
    kernel = np.exp(-2j * np.pi * phase / n)
    return Spectrum(kernel @ signal)


def _bit_reverse_indices(n: int) -> np.ndarray:
    bits = n.bit_length() - 1
    indices = np.arange(n)
    reversed_indices = np.zeros(n, dtype=np.intp)
    for _ in range(bits):
        reversed_indices = (reversed_indices << 1) | (indices & 1)
        indices = indices >> 1
    return reversed_indices


def fft(x) -> Spectrum:
    """
    Iterative radix-2 decimation-in-time FFT.

    Matches `dft_brute` to floating-point accuracy.

    Raises:
        DataError: If the length is not a power of two
    """
    signal = _as_signal(x)
    n = signal.size
    if not is_power_of_two(n):
        raise DataError(f"fft length must be a power of two, got {n}; zero-pad or use dft_brute")

    data = signal[_bit_reverse_indices(n)].astype(np.complex128)
    size = 2
    while size <= n:
        half = size // 2
        twiddle = np.exp(-2j * np.pi * np.arange(half) / size)
        blocks = data.reshape(-1, size)
        even = blocks[:, :half].copy()
        odd = blocks[:, half:] * twiddle
        blocks[:, :half] = even + odd
        blocks[:, half:] = even - odd
        size *= 2
    return Spectrum(data)


def hann_window(size: int) -> np.ndarray:
    """Periodic Hann window: 0.5 - 0.5 cos(2*pi*t/size)."""
    return 0.5 - 0.5 * np.cos(2.0 * np.pi * np.arange(size) / size)


def stft(x, window_size: int, hop: int) -> Spectrogram:
    """
    Short-time Fourier magnitudes with a Hann window.

    Frame f covers samples [f*hop, f*hop + window_size); each row holds the
    one-sided magnitudes (window_size/2 + 1 bins).

    Raises:
        DataError: If the window is not a power of two, exceeds the signal, or hop < 1
    """
    signal = _as_signal(x)
    if hop < 1:
        raise DataError(f"hop must be >= 1, got {hop}")
    if not is_power_of_two(window_size):
        raise DataError(f"window size must be a power of two, got {window_size}")
    if window_size > signal.size:
        raise DataError(f"window size {window_size} exceeds signal length {signal.size}")

    window = hann_window(window_size)
    count = Spectrogram.expected_frame_count(signal.size, window_size, hop)
    frames = np.empty((count, window_size // 2 + 1))
    for f in range(count):
        start = f * hop
        segment = signal[start:start + window_size] * window
        frames[f] = fft(segment).one_sided_magnitudes()
    return Spectrogram(frames, window_size, hop)


def haar_forward(x, levels: int) -> WaveletDecomposition:
    """
    Orthonormal multi-level Haar decomposition.

    Each level maps pairs (a, b) to approximation (a + b)/sqrt(2) and detail
    (a - b)/sqrt(2), then recurses on the approximation.

    Raises:
        DataError: If the length is not 2^k with 1 <= levels <= k
    """
    signal = _as_signal(x)
    n = signal.size
    if not is_power_of_two(n):
        raise DataError(f"haar length must be a power of two, got {n}")
    max_levels = n.bit_length() - 1
    if not 1 <= levels <= max_levels:
        raise DataError(f"levels must lie in [1, {max_levels}] for length {n}, got {levels}")

    approximation = signal
    details = []
    for _ in range(levels):
        even = approximation[0::2]
        odd = approximation[1::2]
        details.append((even - odd) / np.sqrt(2.0))
        approximation = (even + odd) / np.sqrt(2.0)
    return WaveletDecomposition(approximation, tuple(details))


def haar_inverse(decomposition: WaveletDecomposition) -> np.ndarray:
    """
    Perfect reconstruction from a Haar decomposition.

    Raises:
        DataError: If detail lengths do not halve level by level down to the approximation
    """
    approximation = decomposition.approximation
    for level in range(decomposition.levels - 1, -1, -1):
        detail = decomposition.details[level]
        if detail.shape != approximation.shape:
            raise DataError(
                f"detail level {level} has {detail.size} coefficient(s), "
                f"expected {approximation.size}"
            )
        signal = np.empty(2 * approximation.size)
        signal[0::2] = (approximation + detail) / np.sqrt(2.0)
        signal[1::2] = (approximation - detail) / np.sqrt(2.0)
        approximation = signal
    return approximation.copy()
