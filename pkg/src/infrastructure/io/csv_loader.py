"""
CSV adapter - reads and writes datasets with pandas.

Cells are read as text first so missing tokens and parse failures can be
reported per row and column.
"""
import csv
import io
import logging
from pathlib import Path
from typing import Iterable, List

import numpy as np
import pandas as pd

from application.defaults import MISSING_TOKENS
from domain.entities.dataset import Dataset
from domain.exceptions import DataError

logger = logging.getLogger(__name__)


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except FileNotFoundError as error:
        raise DataError(f"cannot read '{path}': file not found") from error
    except (OSError, UnicodeDecodeError) as error:
        raise DataError(f"cannot read '{path}': {error}") from error


def _check_field_counts(text: str, path: Path) -> None:
    """Every non-blank line must have as many fields as the header."""
    reader = csv.reader(io.StringIO(text))
    expected = None
    for fields in reader:
        if not fields:
            continue
        if expected is None:
            expected = len(fields)
        elif len(fields) != expected:
            relation = "too few" if len(fields) < expected else "too many"
            raise DataError(
                f"'{path}' has ragged rows: line {reader.line_num} has {relation} fields "
                f"({len(fields)} for {expected} columns)"
            )
    if expected is None:
        raise DataError(f"'{path}' is empty: a header row is required")


def _read_text_table(text: str, path: Path) -> pd.DataFrame:
    try:
        return pd.read_csv(
            io.StringIO(text),
            header=None,
            dtype=str,
            keep_default_na=False,
            na_filter=False,
        )
    except pd.errors.EmptyDataError as error:
        raise DataError(f"'{path}' is empty: a header row is required") from error
    except pd.errors.ParserError as error:
        raise DataError(f"'{path}' has ragged rows: {error}") from error


def _parse_cells(text: np.ndarray, path: Path, header: List[str]) -> np.ndarray:
    """Convert observed text with Python's correctly rounded float parser."""
    try:
        return text.astype(np.float64)
    except ValueError:
        pass
    for (row, col), cell in np.ndenumerate(text):
        try:
            float(cell)
        except ValueError:
            raise DataError(
                f"'{path}' line {row + 2}, row {row}, column '{header[col]}': "
                f"cannot parse {cell!r} as a number"
            ) from None
    raise DataError(f"'{path}': cells could not be parsed")


def load_csv(path, missing_tokens: Iterable[str] = MISSING_TOKENS) -> Dataset:
    """
    Load a header-first, comma-separated numeric file.

    A cell is missing when its stripped text is empty or one of
    `missing_tokens`; every other cell must parse as a real number.

    Args:
        path: CSV file path
        missing_tokens: Cell texts read as missing

    Returns:
        Dataset with at least one row

    Raises:
        DataError: Unreadable file, ragged row, unparseable cell (row and
            column named) or a file without data rows
    """
    path = Path(path)
    tokens = frozenset(missing_tokens) | {""}
    text = _read_text(path)
    _check_field_counts(text, path)
    table = _read_text_table(text, path)

    header = [str(name).strip() for name in table.iloc[0]]
    if len(set(header)) != len(header):
        raise DataError(f"'{path}' has duplicate column names: {header}")
    if table.shape[0] < 2:
        raise DataError(f"'{path}' holds a header but no rows: empty dataset")
    cells = table.iloc[1:].reset_index(drop=True).apply(lambda column: column.str.strip())

    mask = ~cells.isin(tokens).to_numpy()
    observed_text = cells.where(mask, "nan").to_numpy(dtype=object)
    values = _parse_cells(observed_text, path, header)

    dataset = Dataset(header, values, mask)
    logger.info("loaded path=%s rows=%d cols=%d missing=%d",
                path, dataset.n_rows, dataset.n_cols, dataset.missing_count())
    return dataset


def write_csv(dataset: Dataset, path) -> None:
    """
    Write a dataset as CSV; missing cells become empty text.

    Floats are written at full precision so a reload is bit-identical.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame(np.where(dataset.mask, dataset.values, np.nan), columns=dataset.column_names)
    frame.to_csv(path, index=False, na_rep="", float_format="%.17g")
    logger.info("wrote path=%s rows=%d cols=%d", path, dataset.n_rows, dataset.n_cols)
