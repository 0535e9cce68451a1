"""
Integration tests for the decision-engine command line.
"""
import json

import pytest

from infrastructure.cli.command_line import main
from infrastructure.io.csv_loader import load_csv, write_csv
from infrastructure.io.model_store import load_model
from tests.synthetic import decision_dataset

FAST_CONFIG = {
    "mode": "flexibly_bounded",
    "model": {"train": {"epochs": 100}},
    "autoassociative": {"train": {"epochs": 100}},
    "ga": {"population_size": 20, "generations": 15},
    "seed": 4,
}


def write_json(path, data):
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


@pytest.fixture
def workspace(tmp_path):
    """Gappy and complete CSV files plus a fast config."""
    gappy = tmp_path / "gappy.csv"
    complete = tmp_path / "complete.csv"
    write_csv(decision_dataset(n_rows=80, seed=3), gappy)
    write_csv(decision_dataset(n_rows=80, missing=0.0, seed=3), complete)
    config = write_json(tmp_path / "config.json", FAST_CONFIG)
    return {"gappy": str(gappy), "complete": str(complete), "config": config, "root": tmp_path}


class TestCommands:
    """Test suite for successful subcommands."""

    def test_summarize_to_stdout(self, workspace, capsys):
        """Without --out the report goes to stdout."""
        assert main(["summarize", "--data", workspace["gappy"]]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["n_rows"] == 80
        assert data["n_cols"] == 4
        assert data["missing_cells"] > 0
        assert set(data["information_power"]) >= {"ratio", "marginalizable"}

    def test_run_is_reproducible(self, workspace):
        """Two runs with the same config write identical reports."""
        outputs = []
        for name in ("first", "second"):
            out = workspace["root"] / name
            args = ["run", "--data", workspace["gappy"], "--target", "label", "--config", workspace["config"]]
            assert main(args + ["--out", str(out)]) == 0
            outputs.append((out / "report.json").read_bytes())
        assert outputs[0] == outputs[1]
        report = json.loads(outputs[0])
        assert report["mode"] == "flexibly_bounded"
        assert report["seed"] == 4
        assert report["imputation"]["method"] == "correlation_machine"

    def test_seed_flag_overrides_config(self, workspace, capsys):
        """--seed replaces the config's root seed."""
        args = ["run", "--data", workspace["complete"], "--target", "label", "--config", workspace["config"]]
        assert main(args + ["--seed", "9"]) == 0
        assert json.loads(capsys.readouterr().out)["seed"] == 9

    def test_train_writes_loadable_model(self, workspace):
        """train stores the decision machine next to its report."""
        out = workspace["root"] / "model"
        args = ["train", "--data", workspace["complete"], "--target", "label", "--config", workspace["config"]]
        assert main(args + ["--out", str(out)]) == 0
        net = load_model(out / "model.json")
        assert net.layer_sizes[0] == 3
        assert net.layer_sizes[-1] == 1
        assert (out / "report.json").exists()

    def test_impute_writes_completed_csv(self, workspace):
        """impute writes the completed table and the filled cells."""
        out = workspace["root"] / "imputed"
        args = ["impute", "--data", workspace["gappy"], "--config", workspace["config"]]
        assert main(args + ["--out", str(out)]) == 0
        completed = load_csv(out / "imputed.csv")
        assert completed.is_complete()
        assert load_csv(workspace["gappy"]).observed_equal(completed)
        report = json.loads((out / "imputation.json").read_text())
        assert report["method"] == "correlation_machine"
        assert len(report["filled_cells"]) == load_csv(workspace["gappy"]).missing_count()

    def test_decide(self, workspace, capsys):
        """decide picks the option of highest expected utility."""
        spec = write_json(
            workspace["root"] / "utility.json",
            {
                "options": [
                    {"label": "risky", "impact": 10, "probability": 0.1},
                    {"label": "safe", "impact": 3, "probability": 0.9},
                ]
            },
        )
        assert main(["decide", "--utility", spec]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["chosen_label"] == "safe"
        assert data["expected_utilities"] == pytest.approx([1.0, 2.7])

    def test_analyze_rationality(self, workspace, capsys):
        """A mostly irrational process is not satisficing."""
        process = write_json(
            workspace["root"] / "process.json",
            {
                "name": "forecast",
                "threshold": 1,
                "steps": [
                    {"label": "model", "kind": "rational", "power": 0.05},
                    {"label": "rumour", "kind": "irrational", "power": 0.95},
                ],
            },
        )
        assert main(["analyze-rationality", "--process", process]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["name"] == "forecast"
        assert data["ratio"] == pytest.approx(0.05 / 0.95)
        assert data["verdict"] == "not_satisficing"
        assert data["process_rational"] is False

    def test_threshold_flag(self, workspace, capsys):
        """--threshold overrides the document threshold."""
        process = write_json(
            workspace["root"] / "process.json",
            {
                "name": "p",
                "steps": [
                    {"label": "a", "kind": "rational", "power": 0.9},
                    {"label": "b", "kind": "irrational", "power": 0.1},
                ],
            },
        )
        assert main(["analyze-rationality", "--process", process, "--threshold", "20"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["threshold"] == 20.0
        assert data["verdict"] == "not_satisficing"

    def test_documents_read_from_config(self, workspace, capsys):
        """--config carries the utility spec or the process when the dedicated flag is absent."""
        spec = write_json(
            workspace["root"] / "utility.json",
            {"options": [{"label": "a", "impact": 1, "probability": 0.5}, {"label": "b", "impact": 2, "probability": 0.5}]},
        )
        assert main(["decide", "--config", spec]) == 0
        assert json.loads(capsys.readouterr().out)["chosen_label"] == "b"
        process = write_json(
            workspace["root"] / "process.json",
            {"name": "p", "steps": [{"label": "a", "kind": "rational", "power": 1}]},
        )
        assert main(["analyze-rationality", "--config", process]) == 0
        assert json.loads(capsys.readouterr().out)["verdict"] == "satisficing"

    def test_transform(self, workspace):
        """transform writes the feature matrix and its description."""
        out = workspace["root"] / "features"
        args = ["transform", "--data", workspace["complete"], "--domain", "frequency"]
        assert main(args + ["--out", str(out)]) == 0
        meta = json.loads((out / "transform.json").read_text())
        assert meta["domain"] == "frequency"
        assert meta["rows"] == 80
        assert meta["features"] == 3
        assert load_csv(out / "features.csv").shape == (80, 3)

    def test_compare(self, workspace, capsys):
        """compare reports both runs, the delta and the winner."""
        args = ["compare", "--data", workspace["gappy"], "--target", "label", "--config", workspace["config"]]
        assert main(args) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["first"]["mode"] == "bounded"
        assert data["second"]["mode"] == "flexibly_bounded"
        assert data["delta"] == pytest.approx(data["second"]["test_metric"] - data["first"]["test_metric"])
        assert data["winner"] in ("first", "second", "tie")


class TestFailures:
    """Test suite for exit codes and error messages."""

    def test_train_needs_out(self, workspace, capsys):
        """train without --out is a config error."""
        assert main(["train", "--data", workspace["complete"], "--target", "label"]) == 2
        assert "decision-engine train: error:" in capsys.readouterr().err

    def test_missing_data_file(self, workspace, capsys):
        """An absent CSV is a data error."""
        missing = str(workspace["root"] / "absent.csv")
        assert main(["run", "--data", missing, "--target", "label"]) == 3
        assert "[ingest]" in capsys.readouterr().err

    def test_bad_config(self, workspace):
        """Unknown config keys are config errors."""
        config = write_json(workspace["root"] / "bad.json", {"mode": "bounded", "epochs": 5})
        assert main(["run", "--data", workspace["complete"], "--target", "label", "--config", config]) == 2

    def test_unknown_target(self, workspace):
        """An unknown target column is a data error."""
        assert main(["run", "--data", workspace["complete"], "--target", "outcome"]) == 3

    def test_divergence(self, workspace, capsys):
        """A runaway learning rate ends in a numeric failure."""
        config = write_json(
            workspace["root"] / "diverge.json",
            {"mode": "bounded", "model": {"train": {"learning_rate": 1e8, "epochs": 200}}},
        )
        args = ["run", "--data", workspace["complete"], "--target", "x3", "--config", config]
        assert main(args) == 4
        assert "diverged" in capsys.readouterr().err

    def test_transform_needs_out(self, workspace):
        """transform writes files only."""
        assert main(["transform", "--data", workspace["complete"]]) == 2

    def test_unknown_command(self):
        """argparse rejects unknown subcommands."""
        with pytest.raises(SystemExit) as info:
            main(["forecast"])
        assert info.value.code == 2

    @pytest.mark.parametrize("seed", ["-1", "18446744073709551616", "abc"])
    def test_seed_out_of_range(self, workspace, seed):
        """Seeds must be unsigned 64-bit integers."""
        with pytest.raises(SystemExit) as info:
            main(["summarize", "--data", workspace["complete"], "--seed", seed])
        assert info.value.code == 2

    def test_decide_needs_a_document(self, capsys):
        """decide without --utility or --config is a config error."""
        assert main(["decide"]) == 2
        assert "needs --utility" in capsys.readouterr().err

    def test_document_given_twice(self, workspace, capsys):
        """--process and --config cannot both name the document."""
        process = write_json(
            workspace["root"] / "process.json",
            {"name": "p", "steps": [{"label": "a", "kind": "rational", "power": 1}]},
        )
        assert main(["analyze-rationality", "--process", process, "--config", process]) == 2
        assert "not both" in capsys.readouterr().err
