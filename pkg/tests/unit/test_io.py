"""
Unit tests for CSV loading, model persistence, JSON reports and logging setup.
"""
import json
import logging
import math

import numpy as np
import pytest

from application import neural_network
from domain.entities.dataset import Dataset
from domain.exceptions import ConfigError, DataError, ModelSchemaError
from domain.value_objects.activation import Activation
from infrastructure.io import csv_loader, model_store
from infrastructure.io.json_reports import render_report, write_report
from infrastructure.logging_config import configure_logging


def write(tmp_path, text, name="data.csv"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


class TestLoadCsv:
    """Test suite for CSV ingestion."""

    def test_values_and_mask(self, tmp_path):
        """Empty cells and missing tokens are masked; others parse."""
        ds = csv_loader.load_csv(write(tmp_path, "a,b,c\n1,2.5,?\n,NaN,-3e2\n"))
        assert ds.column_names == ("a", "b", "c")
        assert ds.mask.tolist() == [[True, True, False], [False, False, True]]
        assert ds.values[0, 1] == 2.5
        assert ds.values[1, 2] == -300.0

    def test_whitespace_is_stripped(self, tmp_path):
        """Cells and headers are trimmed."""
        ds = csv_loader.load_csv(write(tmp_path, " a , b \n 1 ,  \n"))
        assert ds.column_names == ("a", "b")
        assert ds.values[0, 0] == 1.0
        assert not ds.mask[0, 1]

    def test_custom_tokens(self, tmp_path):
        """Callers choose which texts mean missing."""
        ds = csv_loader.load_csv(write(tmp_path, "a,b\nNA,2\n"), missing_tokens={"NA"})
        assert ds.mask.tolist() == [[False, True]]

    def test_unparseable_cell_named(self, tmp_path):
        """A bad cell reports its line, row and column."""
        with pytest.raises(DataError, match=r"line 3, row 1, column 'b'"):
            csv_loader.load_csv(write(tmp_path, "a,b\n1,2\n3,abc\n"))

    def test_ragged_long_row(self, tmp_path):
        """Rows with too many fields are rejected."""
        with pytest.raises(DataError, match="ragged"):
            csv_loader.load_csv(write(tmp_path, "a,b\n1,2,3\n"))

    def test_ragged_short_row(self, tmp_path):
        """Rows with too few fields are rejected."""
        with pytest.raises(DataError, match="ragged rows: line 3 has too few fields"):
            csv_loader.load_csv(write(tmp_path, "a,b,c\n1,2,3\n4,5\n"))

    def test_short_row_of_empty_fields(self, tmp_path):
        """A short row is ragged even when its present fields are empty."""
        with pytest.raises(DataError, match="line 2"):
            csv_loader.load_csv(write(tmp_path, "a,b,c\n,\n1,2,3\n"))

    def test_decimal_text_is_parsed_exactly(self, tmp_path, rng):
        """Observed cells equal Python's correctly rounded float of the file text."""
        numbers = rng.normal(size=200) * 10.0 ** rng.integers(-8, 8, size=200)
        texts = [repr(float(x)) for x in numbers]
        lines = ["x"] + texts
        ds = csv_loader.load_csv(write(tmp_path, "\n".join(lines) + "\n"))
        expected = np.array([float(t) for t in texts])
        assert np.array_equal(ds.values[:, 0], expected)

    def test_loading_twice_is_identical(self, tmp_path):
        """Repeated loads of one file give equal, bit-identical datasets."""
        path = write(tmp_path, "a,b\n0.1,?\n2.675,1e-7\n,3.3333333333333335\n")
        first = csv_loader.load_csv(path)
        second = csv_loader.load_csv(path)
        assert first == second
        assert np.array_equal(first.mask, second.mask)
        assert first.values[first.mask].tobytes() == second.values[second.mask].tobytes()

    def test_header_only(self, tmp_path):
        """A header without rows is an empty dataset."""
        with pytest.raises(DataError, match="empty dataset"):
            csv_loader.load_csv(write(tmp_path, "a,b\n"))

    def test_empty_file(self, tmp_path):
        """An empty file has no header."""
        with pytest.raises(DataError, match="empty"):
            csv_loader.load_csv(write(tmp_path, ""))

    def test_missing_file(self, tmp_path):
        """Absent files are data errors."""
        with pytest.raises(DataError, match="not found"):
            csv_loader.load_csv(tmp_path / "absent.csv")

    def test_duplicate_header(self, tmp_path):
        """Column names must be unique."""
        with pytest.raises(DataError, match="duplicate"):
            csv_loader.load_csv(write(tmp_path, "a,a\n1,2\n"))

    def test_write_then_load_is_exact(self, tmp_path, rng):
        """Written files reload bit-identically, missing cells included."""
        values = rng.normal(size=(6, 3)) * 1e3
        mask = rng.random((6, 3)) > 0.3
        ds = Dataset(("x", "y", "z"), values, mask)
        path = tmp_path / "out" / "copy.csv"
        csv_loader.write_csv(ds, path)
        assert csv_loader.load_csv(path) == ds


class TestModelStore:
    """Test suite for JSON model persistence."""

    @pytest.fixture
    def net(self):
        """Small seeded sigmoid net."""
        return neural_network.init_mlp((3, 4, 2), Activation.SIGMOID, seed=17)

    def test_roundtrip_is_bit_exact(self, net, tmp_path, rng):
        """A reloaded net gives bit-identical outputs."""
        path = tmp_path / "model.json"
        model_store.save_model(net, path)
        loaded = model_store.load_model(path)
        assert loaded == net
        x = rng.normal(size=(5, 3))
        assert np.array_equal(neural_network.forward_batch(loaded, x), neural_network.forward_batch(net, x))

    def test_resave_is_a_fixed_point(self, net, tmp_path):
        """Saving a reloaded net writes the same document."""
        first = tmp_path / "first.json"
        second = tmp_path / "second.json"
        model_store.save_model(net, first)
        model_store.save_model(model_store.load_model(first), second)
        assert first.read_text() == second.read_text()

    def test_schema_fields(self, net):
        """The document holds exactly the schema fields."""
        data = model_store.model_to_dict(net)
        assert set(data) == set(model_store.SCHEMA_FIELDS)
        assert data["activations"] == ["tanh", "sigmoid"]
        assert len(data["weights"][0]) == 4

    @pytest.mark.parametrize("field", ["layer_sizes", "activations", "weights", "biases"])
    def test_missing_field_named(self, net, field):
        """Each missing field is named in the error."""
        data = model_store.model_to_dict(net)
        del data[field]
        with pytest.raises(ModelSchemaError, match=field):
            model_store.model_from_dict(data)

    def test_unknown_field(self, net):
        """Extra fields are not part of the schema."""
        data = model_store.model_to_dict(net)
        data["momentum"] = 0.9
        with pytest.raises(ModelSchemaError, match="momentum"):
            model_store.model_from_dict(data)

    def test_wrong_weight_shape(self, net):
        """Weights that do not chain with layer_sizes are rejected."""
        data = model_store.model_to_dict(net)
        data["weights"][0] = data["weights"][0][:-1]
        with pytest.raises(ModelSchemaError, match="weights"):
            model_store.model_from_dict(data)

    def test_hidden_activation_must_be_tanh(self, net):
        """Hidden layers are tanh."""
        data = model_store.model_to_dict(net)
        data["activations"][0] = "sigmoid"
        with pytest.raises(ModelSchemaError, match="tanh"):
            model_store.model_from_dict(data)

    def test_truncated_file(self, net, tmp_path):
        """A cut-off file is a schema error, which is also a data error."""
        path = tmp_path / "model.json"
        model_store.save_model(net, path)
        path.write_text(path.read_text()[:40])
        with pytest.raises(DataError):
            model_store.load_model(path)

    def test_atomic_write_leaves_no_temp_files(self, tmp_path):
        """Only the target file remains after a write."""
        model_store.write_text_atomic(tmp_path / "report.json", "{}")
        assert [p.name for p in tmp_path.iterdir()] == ["report.json"]


class TestReportsAndLogging:
    """Test suite for report rendering and logging setup."""

    def test_render_is_stable(self):
        """Rendering is deterministic and ends with a newline."""
        data = {"ratio": math.inf, "name": "p"}
        assert render_report(data) == render_report(dict(data))
        assert render_report(data).endswith("}\n")
        assert '"ratio": Infinity' in render_report(data)

    def test_write_report(self, tmp_path):
        """Written reports parse back as JSON."""
        path = tmp_path / "r" / "report.json"
        write_report({"a": 1}, path)
        assert json.loads(path.read_text()) == {"a": 1}

    def test_configure_logging(self):
        """Known levels set the root logger."""
        configure_logging("info")
        assert logging.getLogger().level == logging.INFO
        configure_logging("WARNING")

    def test_unknown_level(self):
        """Unknown level names are config errors."""
        with pytest.raises(ConfigError):
            configure_logging("LOUD")
