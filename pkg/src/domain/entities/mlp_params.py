"""
Multi-layer perceptron parameters.

Shared by the autoassociative correlation machine and the causal decision
machine. Weight matrices are stored out x in, so layer l maps
a_{l-1} -> act(W_l a_{l-1} + b_l).
"""
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from domain.exceptions import ConfigError
from domain.value_objects.activation import Activation


@dataclass(frozen=True, eq=False)
class MlpParams:
    """
    Immutable layered weights, biases and activations.

    Invariants:
    - weight shapes chain with layer_sizes
    - every parameter is finite
    - hidden activation is tanh; output is linear or sigmoid
    """

    layer_sizes: Tuple[int, ...]
    weights: Tuple[np.ndarray, ...]
    biases: Tuple[np.ndarray, ...]
    output_activation: Activation = Activation.LINEAR
    hidden_activation: Activation = Activation.TANH

    def __post_init__(self) -> None:
        sizes = tuple(int(s) for s in self.layer_sizes)
        if len(sizes) < 2 or any(s < 1 for s in sizes):
            raise ConfigError(f"layer_sizes needs >= 2 positive entries, got {list(sizes)}")
        if self.hidden_activation is not Activation.TANH:
            raise ConfigError("hidden activation must be tanh")
        if self.output_activation not in (Activation.LINEAR, Activation.SIGMOID):
            raise ConfigError(f"unsupported output activation {self.output_activation}")
        if len(self.weights) != len(sizes) - 1 or len(self.biases) != len(sizes) - 1:
            raise ConfigError(
                f"{len(sizes) - 1} layer(s) expected, got {len(self.weights)} weight "
                f"and {len(self.biases)} bias array(s)"
            )

        weights = []
        biases = []
        for layer, (w, b) in enumerate(zip(self.weights, self.biases)):
            w = np.array(w, dtype=np.float64, copy=True)
            b = np.array(b, dtype=np.float64, copy=True).reshape(-1)
            expected = (sizes[layer + 1], sizes[layer])
            if w.shape != expected:
                raise ConfigError(f"weights[{layer}]: shape {w.shape}, expected {expected}")
            if b.shape != (sizes[layer + 1],):
                raise ConfigError(f"biases[{layer}]: length {b.shape[0]}, expected {sizes[layer + 1]}")
            if not (np.isfinite(w).all() and np.isfinite(b).all()):
                raise ConfigError(f"layer {layer} holds non-finite parameters")
            w.setflags(write=False)
            b.setflags(write=False)
            weights.append(w)
            biases.append(b)

        object.__setattr__(self, "layer_sizes", sizes)
        object.__setattr__(self, "weights", tuple(weights))
        object.__setattr__(self, "biases", tuple(biases))

    @property
    def input_size(self) -> int:
        """Width of the input layer."""
        return self.layer_sizes[0]

    @property
    def output_size(self) -> int:
        """Width of the output layer."""
        return self.layer_sizes[-1]

    @property
    def n_layers(self) -> int:
        """Number of weight layers."""
        return len(self.weights)

    def parameter_count(self) -> int:
        """Total number of weights and biases."""
        return sum(w.size + b.size for w, b in zip(self.weights, self.biases))

    def with_parameters(
        self,
        weights: Sequence[np.ndarray],
        biases: Sequence[np.ndarray],
    ) -> "MlpParams":
        """Create a net with the same architecture and new parameters."""
        return MlpParams(
            self.layer_sizes,
            tuple(weights),
            tuple(biases),
            self.output_activation,
            self.hidden_activation,
        )

    def __eq__(self, other: object) -> bool:
        """Check bit-exact equality of architecture and parameters."""
        if not isinstance(other, MlpParams):
            return False
        return (
            self.layer_sizes == other.layer_sizes
            and self.output_activation is other.output_activation
            and all(np.array_equal(a, b) for a, b in zip(self.weights, other.weights))
            and all(np.array_equal(a, b) for a, b in zip(self.biases, other.biases))
        )

    __hash__ = None


@dataclass(frozen=True, eq=False)
class ParameterGradient:
    """Gradient of a scalar loss, shaped like MlpParams weights and biases."""

    weights: Tuple[np.ndarray, ...]
    biases: Tuple[np.ndarray, ...]

    def scale(self, factor: float) -> "ParameterGradient":
        """Multiply every component by `factor`."""
        return ParameterGradient(
            tuple(w * factor for w in self.weights),
            tuple(b * factor for b in self.biases),
        )

    def flatten(self) -> np.ndarray:
        """Concatenate every component, layer by layer (weights then bias)."""
        parts = []
        for w, b in zip(self.weights, self.biases):
            parts.append(w.reshape(-1))
            parts.append(b.reshape(-1))
        return np.concatenate(parts)

    def max_abs(self) -> float:
        """Largest absolute component."""
        return float(np.max(np.abs(self.flatten())))
