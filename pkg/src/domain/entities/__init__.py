"""Domain entities module."""
from .dataset import Dataset
from .mlp_params import MlpParams, ParameterGradient
from .decision_process import DecisionProcess

__all__ = [
    'Dataset',
    'MlpParams',
    'ParameterGradient',
    'DecisionProcess',
]
