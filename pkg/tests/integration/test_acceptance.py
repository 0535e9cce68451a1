"""
Statistical acceptance checks over several seeds.

The network and pipeline suites are slow; deselect them with -m "not slow".
"""
import numpy as np
import pytest

from application import missing_data_estimator as mde
from application import rationality_analyzer
from application import signal_processing as sp
from application.decision_pipeline import compare_dataset
from application.pipeline_config import AutoassociativeSpec, ModelSpec, PipelineConfig
from domain.entities.decision_process import DecisionProcess
from domain.value_objects.ga_config import GaConfig
from domain.value_objects.imputation import ImputerSpec
from domain.value_objects.imputation_method import ImputationMethod
from domain.value_objects.process_step import ProcessStep
from domain.value_objects.rationality_report import NOT_SATISFICING
from domain.value_objects.step_kind import StepKind
from domain.value_objects.train_config import TrainConfig
from tests.synthetic import decision_dataset, linear_dataset, ols_oracle_fill

SEEDS = range(10)


def rmse(truth, filled, eval_mask):
    return float(np.sqrt(np.mean((truth.values[eval_mask] - filled[eval_mask]) ** 2)))


@pytest.mark.slow
class TestImputationAcceptance:
    """Correlation machine against column means and a least-squares oracle."""

    def test_correlation_machine_beats_column_mean(self):
        """Network fills win most seeds and stay near the oracle."""
        wins = 0
        for seed in SEEDS:
            truth, masked, eval_mask = linear_dataset(n_rows=500, seed=seed)
            config = TrainConfig(learning_rate=1.0, epochs=1000, batch_size=32, seed=seed)
            net, params, _ = mde.fit_correlation_machine(masked, config)
            machine = mde.impute_dataset(
                masked,
                ImputerSpec(
                    ImputationMethod.CORRELATION_MACHINE,
                    net=net,
                    ga=GaConfig(population_size=40, generations=100, seed=seed),
                    normalization=params,
                ),
            )
            baseline = mde.impute_dataset(masked, ImputerSpec(ImputationMethod.COLUMN_MEAN))

            machine_rmse = mde.evaluate_imputation(truth, machine, eval_mask)
            baseline_rmse = mde.evaluate_imputation(truth, baseline, eval_mask)
            oracle_rmse = rmse(truth, ols_oracle_fill(truth, masked), eval_mask)

            wins += machine_rmse < baseline_rmse
            assert machine_rmse <= 2.0 * oracle_rmse, f"seed {seed}"
        assert wins >= 8


@pytest.mark.slow
class TestModeComparisonAcceptance:
    """Flexibly-bounded runs against bounded runs on gappy decision data."""

    def test_flexible_accuracy_at_least_bounded(self):
        """Shifting the bounds does not lose accuracy on most seeds."""
        at_least = 0
        for seed in SEEDS:
            dataset = decision_dataset(n_rows=400, seed=seed)
            config = PipelineConfig(
                model=ModelSpec(train=TrainConfig(epochs=500)),
                autoassociative=AutoassociativeSpec(
                    train=TrainConfig(learning_rate=1.0, epochs=1000, batch_size=32)
                ),
                ga=GaConfig(population_size=30, generations=60),
                seed=seed,
            )
            comparison = compare_dataset(dataset, config, "label")
            at_least += comparison.delta >= 0.0
        assert at_least >= 8


class TestTransformAcceptance:
    """Fourier and Haar transforms over the full length grid."""

    def test_fft_against_direct_dft(self):
        """Every power-of-two length up to 1024 matches the direct DFT."""
        rng = np.random.default_rng(2024)
        for power in range(11):
            n = 2 ** power
            for _ in range(20):
                x = rng.normal(size=n)
                fast = sp.fft(x)
                assert np.max(np.abs(fast.coefficients - sp.dft_brute(x).coefficients)) < 1e-9, f"n={n}"
                assert fast.energy() == pytest.approx(float(np.sum(x ** 2)), rel=1e-9)

    def test_haar_round_trip(self):
        """Full-depth decompositions reconstruct and keep energy."""
        rng = np.random.default_rng(77)
        for n in (8, 64, 256):
            levels = n.bit_length() - 1
            for _ in range(100):
                x = rng.normal(size=n)
                decomposition = sp.haar_forward(x, levels)
                assert np.max(np.abs(sp.haar_inverse(decomposition) - x)) < 1e-9
                assert decomposition.energy() == pytest.approx(float(np.sum(x ** 2)), rel=1e-9)


class TestRationalityAcceptance:
    """Mostly irrational process against the default threshold."""

    def test_small_rational_share_is_not_satisficing(self):
        """Powers 0.05 rational and 0.95 irrational give a ratio near 0.05."""
        process = DecisionProcess(
            "forecast",
            [ProcessStep("model", StepKind.RATIONAL, 0.05), ProcessStep("rumour", StepKind.IRRATIONAL, 0.95)],
        )
        report = rationality_analyzer.assess_satisficing(process, 1.0)
        assert report.ratio == pytest.approx(0.0526, abs=0.005)
        assert report.verdict == NOT_SATISFICING
