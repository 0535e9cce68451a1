"""
Decision pipeline - central coordinator using the Mediator pattern.

Wires ingestion, imputation, feature transforms, the decision machine and
the utility device into one seeded, staged run. Bounded runs use a
baseline imputer with raw features; flexibly-bounded runs shift the bounds
with the correlation machine and any feature domain.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from typing import Optional, Tuple, Union

import numpy as np

from application import (
    data_preparation,
    feature_extraction,
    missing_data_estimator,
    neural_network,
    rationality_analyzer,
    seeding,
    utility_optimizer,
)
from application.defaults import CLASSIFICATION_CUTOFF
from application.pipeline_config import PipelineConfig
from application.pipeline_mode import DecisionTask, PipelineMode
from application.pipeline_report import ACCURACY, MSE, ComparisonReport, PipelineReport
from domain.entities.dataset import Dataset
from domain.exceptions import ConfigError, DataError, DecisionEngineError, PipelineStageError
from domain.value_objects.activation import Activation
from domain.value_objects.imputation import ImputationResult, ImputerSpec
from domain.value_objects.imputation_method import ImputationMethod
from domain.value_objects.split_spec import SplitSpec
from infrastructure.io.csv_loader import load_csv

logger = logging.getLogger(__name__)

ConfigPair = Tuple[PipelineConfig, PipelineConfig]


@contextmanager
def _stage(name: str):
    """Tag any error raised inside the block with the stage name."""
    try:
        yield
    except PipelineStageError:
        raise
    except DecisionEngineError as error:
        raise PipelineStageError(name, error) from error


def resolve_task(task: DecisionTask, target: np.ndarray) -> DecisionTask:
    """AUTO becomes CLASSIFICATION when every target value is 0 or 1."""
    if task is not DecisionTask.AUTO:
        return task
    if np.isin(target, (0.0, 1.0)).all():
        return DecisionTask.CLASSIFICATION
    return DecisionTask.REGRESSION


class DecisionPipeline:
    """
    Staged decision run implementing the Mediator pattern.

    Stages: ingest, impute, transform, split, train, evaluate. Every
    stochastic stage draws its seed from the config's root seed, so two
    runs with equal configs produce identical reports.

    Attributes set while running (kept when a later stage fails):
        imputation: Result of the impute stage
        information: Information power of the raw features
    """

    def __init__(self, config: PipelineConfig):
        """
        Initialize pipeline.

        Args:
            config: Validated run description
        """
        self.config = config
        self.imputation: Optional[ImputationResult] = None
        self.information = None

    def run(self, data_path, target_column: str) -> PipelineReport:
        """
        Load a CSV file and run every stage.

        Raises:
            PipelineStageError: Tagged with the failing stage
        """
        with _stage("ingest"):
            dataset = load_csv(data_path, self.config.missing_tokens)
        return self.run_dataset(dataset, target_column)

    def run_dataset(self, dataset: Dataset, target_column: str) -> PipelineReport:
        """
        Run every stage after ingestion.

        Args:
            dataset: Loaded dataset holding features and target
            target_column: Fully observed decision target

        Returns:
            PipelineReport

        Raises:
            PipelineStageError: Tagged with the failing stage
        """
        cfg = self.config
        logger.info("pipeline start mode=%s seed=%d rows=%d", cfg.mode.value, cfg.seed, dataset.n_rows)

        with _stage("ingest"):
            target, features = self._separate(dataset, target_column)
            self.information = rationality_analyzer.information_power_ratio(features)

        with _stage("impute"):
            imputation, imputation_seed, auto_report = self.impute(features)
            self.imputation = imputation

        with _stage("transform"):
            normalized = data_preparation.normalize(
                imputation.completed, data_preparation.fit_normalization(imputation.completed)
            )
            raw = feature_extraction.transform_matrix(normalized.values, cfg.transform, cfg.feature_params)
            transformed = Dataset.from_complete([f"f{j}" for j in range(raw.shape[1])], raw)
            inputs = data_preparation.normalize(
                transformed, data_preparation.fit_normalization(transformed)
            ).values

        with _stage("split"):
            split_seed = seeding.derive_seed(cfg.seed, seeding.SPLIT)
            train_idx, test_idx = data_preparation.split_indices(
                dataset.n_rows, SplitSpec(cfg.train_fraction, split_seed)
            )

        task = resolve_task(cfg.model.task, target)
        if task is DecisionTask.CLASSIFICATION and not np.isin(target, (0.0, 1.0)).all():
            raise PipelineStageError("train", DataError("classification target must hold only 0 and 1"))

        with _stage("train"):
            low, high = float(target.min()), float(target.max())
            scale = high - low if high > low else 1.0
            if task is DecisionTask.CLASSIFICATION:
                targets = target.reshape(-1, 1)
            else:
                targets = ((target - low) / scale).reshape(-1, 1)
            net, train_report = self._train(inputs[train_idx], targets[train_idx], task)

        with _stage("evaluate"):
            outputs = neural_network.forward_batch(net, inputs[test_idx])[:, 0]
            truth = target[test_idx]
            if task is DecisionTask.CLASSIFICATION:
                metric = ACCURACY
                predictions = (outputs >= CLASSIFICATION_CUTOFF).astype(np.float64)
                value = float(np.mean(predictions == truth))
            else:
                metric = MSE
                predictions = outputs * scale + low
                value = float(np.mean((predictions - truth) ** 2))
            decision = None
            if cfg.utility is not None:
                decision = utility_optimizer.choose_rational(cfg.utility).with_model_outputs(
                    [[p] for p in predictions]
                )

        logger.info("pipeline done mode=%s %s=%.6g", cfg.mode.value, metric, value)
        return PipelineReport(
            config=cfg,
            target_column=target_column,
            task=task,
            information=self.information,
            imputation=imputation,
            imputation_seed=imputation_seed,
            autoassociative_train=auto_report,
            feature_count=int(inputs.shape[1]),
            n_train=int(train_idx.size),
            n_test=int(test_idx.size),
            train=train_report,
            metric=metric,
            test_metric=value,
            model=net,
            decision=decision,
        )

    @staticmethod
    def _separate(dataset: Dataset, target_column: str) -> Tuple[np.ndarray, Dataset]:
        index = dataset.column_index(target_column)
        if not dataset.mask[:, index].all():
            rows = np.flatnonzero(~dataset.mask[:, index])
            raise DataError(f"target column '{target_column}' is missing at row {int(rows[0])}")
        features = dataset.drop_column(target_column)
        if features.n_cols == 0:
            raise DataError("no feature columns besides the target")
        return np.array(dataset.values[:, index]), features

    def impute(self, features: Dataset):
        """Run the mode's imputer; returns (result, seed, autoassociative report)."""
        cfg = self.config
        if features.is_complete():
            logger.info("no missing cells; imputation skipped")
            return ImputationResult.unchanged(features, cfg.imputer), None, None

        if cfg.mode is PipelineMode.BOUNDED:
            return missing_data_estimator.impute_dataset(features, ImputerSpec(cfg.imputer)), None, None

        auto_seed = seeding.derive_seed(cfg.seed, seeding.AUTOASSOCIATIVE)
        net, params, auto_report = missing_data_estimator.fit_correlation_machine(
            features,
            cfg.autoassociative.train.with_seed(auto_seed),
            cfg.autoassociative.hidden_size,
        )
        imputation_seed = seeding.derive_seed(cfg.seed, seeding.IMPUTATION)
        spec = ImputerSpec(
            ImputationMethod.CORRELATION_MACHINE,
            net=net,
            ga=cfg.ga.with_seed(imputation_seed),
            max_workers=cfg.max_workers,
            normalization=params,
        )
        return missing_data_estimator.impute_dataset(features, spec), imputation_seed, auto_report

    def _train(self, inputs: np.ndarray, targets: np.ndarray, task: DecisionTask):
        cfg = self.config
        hidden = cfg.model.hidden_sizes or (neural_network.default_hidden_size(inputs.shape[1]),)
        activation = Activation.SIGMOID if task is DecisionTask.CLASSIFICATION else Activation.LINEAR
        train_config = cfg.model.train.with_seed(seeding.derive_seed(cfg.seed, seeding.DECISION))
        net = neural_network.init_mlp(
            (inputs.shape[1], *hidden, 1),
            activation,
            train_config.init_scale,
            train_config.seed,
        )
        return neural_network.train(net, inputs, targets, train_config)


def run_pipeline(data_path, config: PipelineConfig, target_column: str) -> PipelineReport:
    """Run one pipeline on a CSV file."""
    return DecisionPipeline(config).run(data_path, target_column)


def _config_pair(configs: Union[PipelineConfig, ConfigPair]) -> ConfigPair:
    if isinstance(configs, PipelineConfig):
        return configs.as_mode(PipelineMode.BOUNDED), configs.as_mode(PipelineMode.FLEXIBLY_BOUNDED)
    first, second = configs
    if first.seed != second.seed:
        raise ConfigError(f"compared runs must share a seed, got {first.seed} and {second.seed}")
    return first, second


def compare_dataset(
    dataset: Dataset,
    configs: Union[PipelineConfig, ConfigPair],
    target_column: str,
) -> ComparisonReport:
    """
    Run two pipelines on the same dataset and compare their test metrics.

    Args:
        dataset: Loaded dataset
        configs: (first, second) pair sharing a seed, or one base config
            from which the bounded (first) and flexibly-bounded (second)
            variants are derived
        target_column: Shared decision target

    Returns:
        ComparisonReport
    """
    first, second = _config_pair(configs)
    if max(first.max_workers, second.max_workers) > 1:
        with ThreadPoolExecutor(max_workers=2) as pool:
            futures = [
                pool.submit(DecisionPipeline(cfg).run_dataset, dataset, target_column)
                for cfg in (first, second)
            ]
            reports = [f.result() for f in futures]
    else:
        reports = [DecisionPipeline(cfg).run_dataset(dataset, target_column) for cfg in (first, second)]
    comparison = ComparisonReport(*reports)
    logger.info("compare delta=%.6g winner=%s", comparison.delta, comparison.winner)
    return comparison


def compare_modes(
    data_path,
    configs: Union[PipelineConfig, ConfigPair],
    target_column: str,
) -> ComparisonReport:
    """Load a CSV file once and compare two pipeline runs on it."""
    first, second = _config_pair(configs)
    with _stage("ingest"):
        dataset = load_csv(data_path, first.missing_tokens)
    return compare_dataset(dataset, (first, second), target_column)
