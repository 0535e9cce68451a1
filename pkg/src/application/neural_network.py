"""
Multi-layer perceptron: evaluation, loss, backpropagation and training.

Hidden layers use tanh; the output layer is linear or sigmoid. The loss is
the mean over rows of 0.5 * ||forward(x) - y||^2 for every task.
"""
import logging
from typing import List, Sequence, Tuple

import numpy as np

from application import defaults
from domain.entities.mlp_params import MlpParams, ParameterGradient
from domain.exceptions import DataError, NumericError
from domain.value_objects.activation import Activation
from domain.value_objects.train_config import TrainConfig, TrainReport

logger = logging.getLogger(__name__)


def default_hidden_size(n_inputs: int) -> int:
    """max(2, round(0.75 * n_inputs))."""
    return max(defaults.MIN_HIDDEN_SIZE, int(round(defaults.HIDDEN_SIZE_RATIO * n_inputs)))


def init_mlp(
    layer_sizes: Sequence[int],
    output_activation: Activation = Activation.LINEAR,
    init_scale: float = 0.5,
    seed: int = 0,
) -> MlpParams:
    """
    Seeded Uniform(-init_scale, +init_scale) initialization of every parameter.

    Args:
        layer_sizes: Input, hidden..., output widths
        output_activation: LINEAR or SIGMOID
        init_scale: Half-width of the uniform range
        seed: Unsigned seed

    Returns:
        New MlpParams
    """
    rng = np.random.default_rng(seed)
    weights = []
    biases = []
    for fan_in, fan_out in zip(layer_sizes[:-1], layer_sizes[1:]):
        weights.append(rng.uniform(-init_scale, init_scale, size=(fan_out, fan_in)))
        biases.append(rng.uniform(-init_scale, init_scale, size=fan_out))
    return MlpParams(tuple(layer_sizes), tuple(weights), tuple(biases), output_activation)


def _sigmoid(z: np.ndarray) -> np.ndarray:
    # Split by sign so large |z| never overflows exp
    out = np.empty_like(z)
    positive = z >= 0
    out[positive] = 1.0 / (1.0 + np.exp(-z[positive]))
    exp_z = np.exp(z[~positive])
    out[~positive] = exp_z / (1.0 + exp_z)
    return out


def _output(z: np.ndarray, activation: Activation) -> np.ndarray:
    if activation is Activation.SIGMOID:
        return _sigmoid(z)
    return z


def _as_matrix(x, width: int, name: str) -> np.ndarray:
    matrix = np.asarray(x, dtype=np.float64)
    if matrix.ndim == 1:
        matrix = matrix.reshape(1, -1)
    if matrix.ndim != 2 or matrix.shape[1] != width:
        raise DataError(f"{name} has width {matrix.shape[-1]}, expected {width}")
    return matrix


def _forward_pass(net: MlpParams, inputs: np.ndarray) -> List[np.ndarray]:
    """Activations of every layer, input first."""
    activations = [inputs]
    last = net.n_layers - 1
    for layer, (w, b) in enumerate(zip(net.weights, net.biases)):
        z = activations[-1] @ w.T + b
        activations.append(_output(z, net.output_activation) if layer == last else np.tanh(z))
    return activations


def forward(net: MlpParams, x) -> np.ndarray:
    """
    Evaluate the network on one input vector.

    Raises:
        DataError: If len(x) differs from the input width
    """
    vector = np.asarray(x, dtype=np.float64).reshape(-1)
    if vector.size != net.input_size:
        raise DataError(f"input has length {vector.size}, expected {net.input_size}")
    return _forward_pass(net, vector.reshape(1, -1))[-1][0]


def forward_batch(net: MlpParams, inputs) -> np.ndarray:
    """
    Evaluate the network on every row of a matrix.

    Raises:
        DataError: If the column count differs from the input width
    """
    return _forward_pass(net, _as_matrix(inputs, net.input_size, "inputs"))[-1]


def _check_pair(net: MlpParams, inputs, targets) -> Tuple[np.ndarray, np.ndarray]:
    x = _as_matrix(inputs, net.input_size, "inputs")
    y = _as_matrix(targets, net.output_size, "targets")
    if x.shape[0] != y.shape[0]:
        raise DataError(f"{x.shape[0]} input row(s) but {y.shape[0]} target row(s)")
    if x.shape[0] == 0:
        raise DataError("no training rows")
    return x, y


def loss(net: MlpParams, inputs, targets) -> float:
    """
    Mean over rows of 0.5 * ||forward(x) - y||^2.

    Raises:
        DataError: On dimension or row-count mismatch
    """
    x, y = _check_pair(net, inputs, targets)
    residual = forward_batch(net, x) - y
    return float(0.5 * np.sum(residual ** 2) / x.shape[0])


def _backprop(net: MlpParams, x: np.ndarray, y: np.ndarray) -> ParameterGradient:
    activations = _forward_pass(net, x)
    output = activations[-1]
    delta = (output - y) / x.shape[0]
    if net.output_activation is Activation.SIGMOID:
        delta = delta * output * (1.0 - output)

    weight_grads = [None] * net.n_layers
    bias_grads = [None] * net.n_layers
    for layer in range(net.n_layers - 1, -1, -1):
        weight_grads[layer] = delta.T @ activations[layer]
        bias_grads[layer] = delta.sum(axis=0)
        if layer > 0:
            hidden = activations[layer]
            delta = (delta @ net.weights[layer]) * (1.0 - hidden ** 2)
    return ParameterGradient(tuple(weight_grads), tuple(bias_grads))


def gradient(net: MlpParams, inputs, targets) -> ParameterGradient:
    """
    Exact analytic gradient of `loss` by backpropagation.

    Raises:
        DataError: On dimension or row-count mismatch
    """
    x, y = _check_pair(net, inputs, targets)
    return _backprop(net, x, y)


def train(net: MlpParams, inputs, targets, config: TrainConfig) -> Tuple[MlpParams, TrainReport]:
    """
    Plain mini-batch gradient descent.

    Rows are reshuffled every epoch with a generator seeded by
    `config.seed`. The loss trace records the full-data loss after each
    epoch. Batch size is clamped to the row count.

    Raises:
        DataError: On empty or mismatched data
        NumericError: When the loss stops being finite (epoch reported)
    """
    x, y = _check_pair(net, inputs, targets)
    n_rows = x.shape[0]
    batch_size = config.batch_size
    if batch_size > n_rows:
        logger.warning("batch_size=%d exceeds rows=%d, clamping", batch_size, n_rows)
        batch_size = n_rows

    rng = np.random.default_rng(config.seed)
    weights = [w.copy() for w in net.weights]
    biases = [b.copy() for b in net.biases]
    current = net
    trace: List[float] = []

    for epoch in range(1, config.epochs + 1):
        order = rng.permutation(n_rows)
        for start in range(0, n_rows, batch_size):
            batch = order[start:start + batch_size]
            grad = _backprop(current, x[batch], y[batch])
            for layer in range(current.n_layers):
                weights[layer] -= config.learning_rate * grad.weights[layer]
                biases[layer] -= config.learning_rate * grad.biases[layer]
            if not all(np.isfinite(p).all() for p in weights + biases):
                raise NumericError(f"training diverged: non-finite parameters at epoch {epoch}")
            current = current.with_parameters(weights, biases)

        epoch_loss = loss(current, x, y)
        if not np.isfinite(epoch_loss):
            raise NumericError(f"training diverged: loss is {epoch_loss} at epoch {epoch}")
        trace.append(epoch_loss)
        logger.debug("epoch=%d loss=%.8g", epoch, epoch_loss)

        if config.early_stop_tol > 0.0 and len(trace) > 1:
            if trace[-2] - trace[-1] < config.early_stop_tol:
                logger.info("early stop epoch=%d loss=%.6g", epoch, epoch_loss)
                break

    report = TrainReport(tuple(trace))
    logger.info("training finished epochs=%d loss=%.6g", report.epochs_run, report.final_loss)
    return current, report


def train_autoassociative(
    inputs,
    config: TrainConfig,
    hidden_size: int = None,
) -> Tuple[MlpParams, TrainReport]:
    """
    Train a network to reproduce its own input.

    Architecture n-h-n with sigmoid output; initialization seeded by
    `config.seed`. Inputs must be fully observed and normalized to [0, 1].

    Raises:
        DataError: On missing or out-of-range inputs
    """
    x = np.asarray(inputs, dtype=np.float64)
    if x.ndim != 2 or x.shape[0] == 0:
        raise DataError("autoassociative training needs a non-empty matrix")
    if not np.isfinite(x).all():
        raise DataError("autoassociative training data must be fully observed")
    if x.min() < 0.0 or x.max() > 1.0:
        raise DataError("autoassociative training data must be normalized to [0, 1]")

    n_cols = x.shape[1]
    hidden = default_hidden_size(n_cols) if hidden_size is None else hidden_size
    net = init_mlp((n_cols, hidden, n_cols), Activation.SIGMOID, config.init_scale, config.seed)
    return train(net, x, x, config)
