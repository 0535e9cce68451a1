"""
Feature transform factory.

Creates the extractor for a feature domain.
"""
from domain.exceptions import ConfigError
from domain.interfaces.i_feature_transform import IFeatureTransform
from domain.value_objects.feature_domain import FeatureDomain
from domain.value_objects.feature_params import FeatureParams
from application.feature_transforms import (
    FrequencyDomainTransform,
    TimeDomainTransform,
    TimeFrequencyTransform,
    WaveletTransform,
)


class TransformFactory:
    """
    Simple factory for feature transforms.

    Creates transform instances based on the feature domain.
    """

    @staticmethod
    def create(domain: FeatureDomain, params: FeatureParams = None) -> IFeatureTransform:
        """
        Create the transform for a domain.

        Args:
            domain: Feature domain
            params: STFT geometry (time-frequency only)

        Returns:
            Transform instance
        """
        params = params or FeatureParams()
        if domain is FeatureDomain.TIME:
            return TimeDomainTransform()
        elif domain is FeatureDomain.FREQUENCY:
            return FrequencyDomainTransform()
        elif domain is FeatureDomain.TIME_FREQUENCY:
            return TimeFrequencyTransform(params.window_size, params.hop)
        elif domain is FeatureDomain.WAVELET:
            return WaveletTransform()
        else:
            raise ConfigError(f"Unknown feature domain: {domain}")
