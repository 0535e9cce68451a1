"""
Feature extraction entry points.

Records are fully observed (imputation runs first); missing cells are
rejected rather than silently transformed.
"""
import logging

import numpy as np

from domain.entities.dataset import Dataset
from domain.exceptions import DataError
from domain.value_objects.enum_parsing import parse_enum
from domain.value_objects.feature_domain import FeatureDomain
from domain.value_objects.feature_params import FeatureParams
from factories.transform_factory import TransformFactory

logger = logging.getLogger(__name__)


def _row(row) -> np.ndarray:
    row = np.asarray(row, dtype=np.float64).reshape(-1)
    if row.size == 0:
        raise DataError("record is empty")
    if not np.isfinite(row).all():
        raise DataError("record is not fully observed; impute before extracting features")
    return row


def output_length(n: int, domain, params: FeatureParams = None) -> int:
    """Feature count for a record of length n."""
    domain = parse_enum(FeatureDomain, domain, "domain")
    return TransformFactory.create(domain, params).output_length(n)


def extract_features(row, domain, params: FeatureParams = None) -> np.ndarray:
    """
    Extract the feature vector of one record.

    Args:
        row: Fully observed real record
        domain: FeatureDomain or its string value
        params: STFT geometry (time-frequency only)

    Returns:
        time: copy of the record; frequency: one-sided FFT magnitudes;
        time-frequency: flattened spectrogram; wavelet: Haar coefficients

    Raises:
        DataError: On missing cells or domain length preconditions
    """
    domain = parse_enum(FeatureDomain, domain, "domain")
    return TransformFactory.create(domain, params).transform_row(_row(row))


def transform_matrix(matrix, domain, params: FeatureParams = None) -> np.ndarray:
    """Extract features from every row of a fully observed matrix."""
    domain = parse_enum(FeatureDomain, domain, "domain")
    matrix = np.asarray(matrix, dtype=np.float64)
    if not np.isfinite(matrix).all():
        raise DataError("matrix is not fully observed; impute before extracting features")
    transform = TransformFactory.create(domain, params)
    features = transform.transform_matrix(matrix)
    logger.debug("features domain=%s rows=%d width=%d", domain.value, *features.shape)
    return features


def transform_dataset(dataset: Dataset, domain, params: FeatureParams = None) -> Dataset:
    """
    Transform a complete dataset into a feature dataset.

    Feature columns are named `f0`, `f1`, ... except in the time domain,
    where the original names are kept.

    Raises:
        DataError: If the dataset has missing cells
    """
    domain = parse_enum(FeatureDomain, domain, "domain")
    if not dataset.is_complete():
        raise DataError(f"{dataset.missing_count()} missing cell(s); impute before extracting features")
    features = transform_matrix(dataset.values, domain, params)
    if domain is FeatureDomain.TIME:
        names = dataset.column_names
    else:
        names = [f"f{j}" for j in range(features.shape[1])]
    return Dataset.from_complete(names, features)
