"""
IImputer interface for missing-data estimators.

Every estimator completes a dataset without touching its observed cells.
"""
from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from ..entities.dataset import Dataset
    from ..value_objects.imputation import ImputationResult


class IImputer(ABC):
    """
    Interface for imputers.

    Implementations are interchangeable: the pipeline only knows this
    contract, so bounded and flexibly-bounded runs differ by the instance
    the factory hands out.
    """

    @abstractmethod
    def impute(self, dataset: 'Dataset') -> 'ImputationResult':
        """
        Fill every missing cell.

        Args:
            dataset: Dataset with zero or more missing cells

        Returns:
            ImputationResult with an all-true mask; observed cells unchanged
        """
        pass
