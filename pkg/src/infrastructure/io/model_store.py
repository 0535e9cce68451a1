"""
Model persistence as JSON.

Schema: {"layer_sizes": [...], "activations": [hidden..., output],
"weights": [out x in nested lists per layer], "biases": [[...] per layer]}.
Floats round-trip exactly, so a reloaded net reproduces forward outputs bit
for bit.
"""
import json
import logging
import os
import tempfile
from pathlib import Path

import numpy as np

from domain.entities.mlp_params import MlpParams
from domain.exceptions import ConfigError, ModelSchemaError
from domain.value_objects.activation import Activation

logger = logging.getLogger(__name__)

SCHEMA_FIELDS = ("layer_sizes", "activations", "weights", "biases")


def model_to_dict(net: MlpParams) -> dict:
    """Serialize a net into the JSON schema."""
    activations = [net.hidden_activation.value] * (net.n_layers - 1) + [net.output_activation.value]
    return {
        "layer_sizes": list(net.layer_sizes),
        "activations": activations,
        "weights": [w.tolist() for w in net.weights],
        "biases": [b.tolist() for b in net.biases],
    }


def _field(data: dict, name: str):
    if name not in data:
        raise ModelSchemaError(f"model field '{name}' is missing")
    return data[name]


def model_from_dict(data) -> MlpParams:
    """
    Rebuild a net from the JSON schema.

    Raises:
        ModelSchemaError: Naming the offending field
    """
    if not isinstance(data, dict):
        raise ModelSchemaError("model document must be a JSON object")
    unknown = sorted(set(data) - set(SCHEMA_FIELDS))
    if unknown:
        raise ModelSchemaError(f"model field '{unknown[0]}' is not part of the schema")

    sizes = _field(data, "layer_sizes")
    if not isinstance(sizes, list) or not all(isinstance(s, int) and not isinstance(s, bool) for s in sizes):
        raise ModelSchemaError("model field 'layer_sizes' must be a list of integers")

    activations = _field(data, "activations")
    if not isinstance(activations, list) or len(activations) != len(sizes) - 1:
        raise ModelSchemaError(f"model field 'activations' needs {len(sizes) - 1} entries")
    try:
        parsed = [Activation(a) for a in activations]
    except ValueError as error:
        raise ModelSchemaError(f"model field 'activations': {error}") from error
    if any(a is not Activation.TANH for a in parsed[:-1]):
        raise ModelSchemaError("model field 'activations': hidden layers must be tanh")

    arrays = {}
    for name in ("weights", "biases"):
        layers = _field(data, name)
        if not isinstance(layers, list):
            raise ModelSchemaError(f"model field '{name}' must be a list of layers")
        try:
            arrays[name] = tuple(np.array(layer, dtype=np.float64) for layer in layers)
        except (TypeError, ValueError) as error:
            raise ModelSchemaError(f"model field '{name}': {error}") from error

    try:
        return MlpParams(tuple(sizes), arrays["weights"], arrays["biases"], parsed[-1])
    except ConfigError as error:
        raise ModelSchemaError(f"model fields 'weights'/'biases': {error}") from error


def write_text_atomic(path, text: str) -> None:
    """Write a file through a temporary sibling and an atomic rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    handle, temp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(handle, "w", encoding="utf-8") as stream:
            stream.write(text)
        os.replace(temp_name, path)
    except BaseException:
        if os.path.exists(temp_name):
            os.remove(temp_name)
        raise


def save_model(net: MlpParams, path) -> None:
    """Persist a net as JSON; a crash never leaves a partial file at `path`."""
    write_text_atomic(path, json.dumps(model_to_dict(net), indent=2))
    logger.info("saved model path=%s layers=%s", path, list(net.layer_sizes))


def load_model(path) -> MlpParams:
    """
    Load a net saved by `save_model`.

    Raises:
        ModelSchemaError: Unreadable, truncated or schema-violating file
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as error:
        raise ModelSchemaError(f"cannot read model '{path}': {error}") from error
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise ModelSchemaError(f"model '{path}' is not valid JSON: {error}") from error
    return model_from_dict(data)
