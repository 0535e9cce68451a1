"""
Activation function enumeration.

Hidden layers always use tanh; the output layer is linear (regression)
or sigmoid (binary decisions, autoassociative reconstruction in [0, 1]).
"""
from enum import Enum


class Activation(Enum):
    """Supported layer activations."""

    TANH = "tanh"
    LINEAR = "linear"
    SIGMOID = "sigmoid"
