"""Domain value objects module."""
from .activation import Activation
from .dataset_summary import ColumnSummary, DatasetSummary
from .feature_domain import FeatureDomain
from .feature_params import FeatureParams
from .ga_config import GaConfig, GaReport
from .imputation_method import ImputationMethod
from .normalization_params import NormalizationParams
from .process_step import ProcessStep, RationalityCriteria
from .rationality_report import InformationPowerReport, RationalityReport
from .spectrum import Spectrogram, Spectrum
from .split_spec import SplitSpec
from .step_kind import StepKind
from .train_config import TrainConfig, TrainReport
from .utility import DecisionOutcome, Objective, UtilityOption, UtilitySpec
from .wavelet_decomposition import WaveletDecomposition

__all__ = [
    'Activation',
    'ColumnSummary',
    'DatasetSummary',
    'FeatureDomain',
    'FeatureParams',
    'GaConfig',
    'GaReport',
    'ImputationMethod',
    'NormalizationParams',
    'ProcessStep',
    'RationalityCriteria',
    'InformationPowerReport',
    'RationalityReport',
    'Spectrogram',
    'Spectrum',
    'SplitSpec',
    'StepKind',
    'TrainConfig',
    'TrainReport',
    'DecisionOutcome',
    'Objective',
    'UtilityOption',
    'UtilitySpec',
    'WaveletDecomposition',
]
