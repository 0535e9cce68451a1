"""
Imputer factory.

Turns an ImputerSpec into the matching IImputer.
"""
from application.imputers import ColumnMeanImputer, CorrelationMachineImputer, ZeroFillImputer
from domain.exceptions import ConfigError
from domain.interfaces.i_imputer import IImputer
from domain.value_objects.imputation import ImputerSpec
from domain.value_objects.imputation_method import ImputationMethod


class ImputerFactory:
    """
    Simple factory for imputers.

    Creates imputer instances from an ImputerSpec.
    """

    @staticmethod
    def create(spec: ImputerSpec) -> IImputer:
        """
        Create the imputer for a spec.

        Args:
            spec: Imputer selection and settings

        Returns:
            Imputer instance
        """
        if spec.method is ImputationMethod.COLUMN_MEAN:
            return ColumnMeanImputer()
        elif spec.method is ImputationMethod.ZERO_FILL:
            return ZeroFillImputer()
        elif spec.method is ImputationMethod.CORRELATION_MACHINE:
            return CorrelationMachineImputer(spec.net, spec.ga, spec.max_workers, spec.normalization)
        else:
            raise ConfigError(f"Unknown imputation method: {spec.method}")
