"""Factories module."""
from .imputer_factory import ImputerFactory
from .transform_factory import TransformFactory

__all__ = ['ImputerFactory', 'TransformFactory']
