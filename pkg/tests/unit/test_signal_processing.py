"""
Unit tests for DFT, FFT, STFT and Haar transforms.
"""
import numpy as np
import pytest

from application import signal_processing as sp
from domain.exceptions import DataError
from domain.value_objects.wavelet_decomposition import WaveletDecomposition


class TestFourier:
    """Test suite for the direct DFT and the radix-2 FFT."""

    def test_dft_known_values(self):
        """DFT of [1, 2, 3, 4] is [10, -2+2i, -2, -2-2i]."""
        spectrum = sp.dft_brute([1.0, 2.0, 3.0, 4.0])
        np.testing.assert_allclose(
            spectrum.coefficients, [10, -2 + 2j, -2, -2 - 2j], atol=1e-12
        )

    def test_fft_matches_dft(self, rng):
        """FFT agrees with the direct DFT for every power-of-two length."""
        for n in (1, 2, 4, 8, 64, 256):
            x = rng.normal(size=n)
            fast = sp.fft(x).coefficients
            slow = sp.dft_brute(x).coefficients
            scale = max(1.0, np.max(np.abs(slow)))
            assert np.max(np.abs(fast - slow)) / scale < 1e-9

    def test_fft_matches_numpy(self, rng):
        """FFT agrees with the library FFT."""
        x = rng.normal(size=128)
        np.testing.assert_allclose(sp.fft(x).coefficients, np.fft.fft(x), atol=1e-9)

    def test_fft_rejects_other_lengths(self):
        """Non power-of-two lengths are data errors."""
        with pytest.raises(DataError, match="power of two"):
            sp.fft(np.ones(6))

    def test_dft_accepts_any_length(self):
        """The direct DFT works for odd lengths too."""
        assert len(sp.dft_brute(np.ones(5))) == 5

    def test_parseval(self, rng):
        """Spectral energy equals signal energy."""
        x = rng.normal(size=32)
        assert sp.fft(x).energy() == pytest.approx(float(np.sum(x ** 2)), rel=1e-9)

    def test_real_signal_is_conjugate_symmetric(self, rng):
        """X[k] = conj(X[n-k]) for real input."""
        assert sp.fft(rng.normal(size=16)).is_conjugate_symmetric()

    def test_empty_and_non_finite_rejected(self):
        """Empty or non-finite signals are data errors."""
        with pytest.raises(DataError):
            sp.dft_brute([])
        with pytest.raises(DataError):
            sp.fft([1.0, np.nan])

    def test_power_of_two_helpers(self):
        """Helpers classify and round up lengths."""
        assert sp.is_power_of_two(1)
        assert sp.is_power_of_two(64)
        assert not sp.is_power_of_two(0)
        assert not sp.is_power_of_two(12)
        assert sp.next_power_of_two(5) == 8
        assert sp.next_power_of_two(8) == 8
        assert sp.next_power_of_two(1) == 1


class TestStft:
    """Test suite for the short-time Fourier transform."""

    def test_frame_geometry(self):
        """Length 16, window 8, hop 4 gives 3 frames of 5 bins."""
        spectrogram = sp.stft(np.arange(16.0), 8, 4)
        assert spectrogram.frame_count == 3
        assert spectrogram.bin_count == 5
        assert spectrogram.flatten().size == 15

    def test_frames_are_windowed_fft(self, rng):
        """Each frame is the one-sided FFT magnitude of the Hann-windowed segment."""
        x = rng.normal(size=20)
        spectrogram = sp.stft(x, 8, 3)
        expected = np.abs(np.fft.rfft(x[3:11] * sp.hann_window(8)))
        np.testing.assert_allclose(spectrogram.frames[1], expected, atol=1e-12)

    @pytest.mark.parametrize("k", [0, 1, 3, 7, 15, 16])
    def test_bin_sinusoid_peaks_at_its_bin(self, k):
        """A sinusoid at bin frequency k peaks at bin k in every frame."""
        window_size = 32
        t = np.arange(128)
        x = np.cos(2.0 * np.pi * k * t / window_size + 0.3)
        spectrogram = sp.stft(x, window_size, 8)
        assert np.argmax(spectrogram.frames, axis=1).tolist() == [k] * spectrogram.frame_count

    def test_window_longer_than_signal(self):
        """A window that does not fit is rejected."""
        with pytest.raises(DataError, match="exceeds"):
            sp.stft(np.ones(4), 8, 1)

    def test_bad_window_and_hop(self):
        """Window must be a power of two and hop positive."""
        with pytest.raises(DataError):
            sp.stft(np.ones(16), 6, 2)
        with pytest.raises(DataError):
            sp.stft(np.ones(16), 8, 0)


class TestHaar:
    """Test suite for the orthonormal Haar transform."""

    def test_single_pair(self):
        """[4, 0] decomposes into approximation and detail of 2*sqrt(2)."""
        decomposition = sp.haar_forward([4.0, 0.0], 1)
        assert decomposition.approximation.tolist() == pytest.approx([2 * np.sqrt(2)])
        assert decomposition.details[0].tolist() == pytest.approx([2 * np.sqrt(2)])

    def test_perfect_reconstruction(self, rng):
        """Inverse restores the signal at every depth."""
        x = rng.normal(size=32)
        for levels in range(1, 6):
            restored = sp.haar_inverse(sp.haar_forward(x, levels))
            assert np.max(np.abs(restored - x)) < 1e-12

    def test_energy_preserved(self, rng):
        """The transform is orthonormal."""
        x = rng.normal(size=16)
        assert sp.haar_forward(x, 4).energy() == pytest.approx(float(np.sum(x ** 2)), rel=1e-12)

    def test_coefficient_count_equals_length(self):
        """Coefficients across all levels number the signal length."""
        decomposition = sp.haar_forward(np.ones(8), 3)
        assert decomposition.coefficient_count() == 8
        assert decomposition.levels == 3

    def test_level_limits(self):
        """Levels must lie in [1, log2 n]."""
        with pytest.raises(DataError):
            sp.haar_forward(np.ones(8), 4)
        with pytest.raises(DataError):
            sp.haar_forward(np.ones(8), 0)
        with pytest.raises(DataError):
            sp.haar_forward(np.ones(6), 1)

    def test_inverse_rejects_mismatched_details(self):
        """Detail lengths must halve level by level."""
        broken = WaveletDecomposition(np.ones(2), (np.ones(3), np.ones(2)))
        with pytest.raises(DataError):
            sp.haar_inverse(broken)
