"""
Dataset entity - numeric table with explicit missingness.

Observed cells are tracked by a boolean mask; missing cells hold NaN and are
never read while masked. Instances are immutable: both arrays are copied and
frozen at construction.
"""
from typing import Iterable, Sequence, Tuple

import numpy as np

from domain.exceptions import DataError


class Dataset:
    """
    Immutable numeric table with an observed/missing mask.

    Invariants:
    - mask shape equals values shape
    - every observed cell is finite
    - one column name per column
    """

    MISSING = np.nan

    def __init__(
        self,
        column_names: Sequence[str],
        values: np.ndarray,
        mask: np.ndarray,
    ) -> None:
        """
        Initialize dataset.

        Args:
            column_names: Column labels
            values: Row-major matrix of reals
            mask: Boolean matrix, True = observed

        Raises:
            DataError: If an invariant does not hold
        """
        values = np.array(values, dtype=np.float64, copy=True)
        mask = np.array(mask, dtype=bool, copy=True)
        if values.ndim != 2:
            raise DataError(f"values must be a matrix, got {values.ndim} dimension(s)")
        if mask.shape != values.shape:
            raise DataError(f"mask shape {mask.shape} differs from values shape {values.shape}")
        if len(column_names) != values.shape[1]:
            raise DataError(
                f"{len(column_names)} column name(s) for {values.shape[1]} column(s)"
            )
        bad = mask & ~np.isfinite(values)
        if bad.any():
            row, col = np.argwhere(bad)[0]
            raise DataError(f"observed cell at row {row}, column '{column_names[col]}' is not finite")

        values[~mask] = self.MISSING
        values.setflags(write=False)
        mask.setflags(write=False)

        self._column_names = tuple(str(name) for name in column_names)
        self._values = values
        self._mask = mask

    @classmethod
    def from_complete(cls, column_names: Sequence[str], values: np.ndarray) -> "Dataset":
        """Build a fully observed dataset."""
        values = np.asarray(values, dtype=np.float64)
        return cls(column_names, values, np.ones(values.shape, dtype=bool))

    @property
    def column_names(self) -> Tuple[str, ...]:
        """Get column labels."""
        return self._column_names

    @property
    def values(self) -> np.ndarray:
        """Get read-only value matrix (NaN where missing)."""
        return self._values

    @property
    def mask(self) -> np.ndarray:
        """Get read-only observed mask."""
        return self._mask

    @property
    def n_rows(self) -> int:
        """Get row count."""
        return self._values.shape[0]

    @property
    def n_cols(self) -> int:
        """Get column count."""
        return self._values.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        """Get (n_rows, n_cols)."""
        return (self.n_rows, self.n_cols)

    def missing_count(self) -> int:
        """Count masked cells."""
        return int((~self._mask).sum())

    def is_complete(self) -> bool:
        """Check if every cell is observed."""
        return bool(self._mask.all())

    def complete_rows(self) -> np.ndarray:
        """Get indices of fully observed rows."""
        return np.flatnonzero(self._mask.all(axis=1))

    def incomplete_rows(self) -> np.ndarray:
        """Get indices of rows with at least one missing cell."""
        return np.flatnonzero(~self._mask.all(axis=1))

    def column_index(self, name: str) -> int:
        """
        Find column position by name.

        Raises:
            DataError: If the column does not exist
        """
        try:
            return self._column_names.index(name)
        except ValueError:
            raise DataError(f"unknown column '{name}'") from None

    def column(self, name: str) -> np.ndarray:
        """Get a column's values (NaN where missing)."""
        return self._values[:, self.column_index(name)]

    def select_columns(self, names: Iterable[str]) -> "Dataset":
        """Project onto the given columns, in the given order."""
        names = list(names)
        idx = [self.column_index(name) for name in names]
        return Dataset(names, self._values[:, idx], self._mask[:, idx])

    def drop_column(self, name: str) -> "Dataset":
        """Project onto every column except `name`."""
        self.column_index(name)
        return self.select_columns(c for c in self._column_names if c != name)

    def take_rows(self, rows: Sequence[int]) -> "Dataset":
        """Get the sub-dataset of the given rows, in the given order."""
        rows = np.asarray(rows, dtype=np.intp)
        return Dataset(self._column_names, self._values[rows], self._mask[rows])

    def with_values(self, values: np.ndarray, mask: np.ndarray = None) -> "Dataset":
        """Create a dataset with the same columns and new cells."""
        return Dataset(self._column_names, values, self._mask if mask is None else mask)

    def observed_equal(self, other: "Dataset") -> bool:
        """
        Check that every cell observed here is observed in `other` with the same bits.

        Used to assert mask conservation across pipeline stages.
        """
        if self.shape != other.shape:
            return False
        if not other.mask[self._mask].all():
            return False
        return bool(np.array_equal(self._values[self._mask], other.values[self._mask]))

    def __eq__(self, other: object) -> bool:
        """Check equality of columns, mask and observed values."""
        if not isinstance(other, Dataset):
            return False
        return (
            self._column_names == other.column_names
            and np.array_equal(self._mask, other.mask)
            and np.array_equal(self._values, other.values, equal_nan=True)
        )

    __hash__ = None

    def __repr__(self) -> str:
        """String representation for debugging."""
        return (
            f"Dataset(rows={self.n_rows}, cols={self.n_cols}, "
            f"missing={self.missing_count()})"
        )
