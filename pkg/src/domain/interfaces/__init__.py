"""Domain interfaces module."""
from .i_imputer import IImputer
from .i_feature_transform import IFeatureTransform

__all__ = [
    'IImputer',
    'IFeatureTransform',
]
