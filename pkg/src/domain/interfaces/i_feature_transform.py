"""
IFeatureTransform interface for signal-domain feature extractors.
"""
from abc import ABC, abstractmethod

import numpy as np


class IFeatureTransform(ABC):
    """
    Interface for per-record feature extractors.

    Output length depends only on the input length and the transform's
    parameters, so every row of a matrix maps to the same width.
    """

    @abstractmethod
    def output_length(self, n: int) -> int:
        """
        Get feature count for a record of length n.

        Args:
            n: Record length

        Returns:
            Feature vector length
        """
        pass

    @abstractmethod
    def transform_row(self, row: np.ndarray) -> np.ndarray:
        """
        Extract features from one fully observed record.

        Args:
            row: Real vector

        Returns:
            Real feature vector of length output_length(len(row))
        """
        pass

    def transform_matrix(self, matrix: np.ndarray) -> np.ndarray:
        """
        Extract features row by row.

        Args:
            matrix: Fully observed rows x columns matrix

        Returns:
            rows x output_length(columns) feature matrix
        """
        matrix = np.asarray(matrix, dtype=np.float64)
        out = np.empty((matrix.shape[0], self.output_length(matrix.shape[1])))
        for i, row in enumerate(matrix):
            out[i] = self.transform_row(row)
        return out
