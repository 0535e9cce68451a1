"""
Error hierarchy for the decision engine.

Every error maps to a command-line exit code so the CLI can report failures
without inspecting messages.
"""
from typing import Optional


class DecisionEngineError(Exception):
    """Root of all engine errors."""

    exit_code = 1


class ConfigError(DecisionEngineError, ValueError):
    """Invalid configuration, spec or value-object invariant."""

    exit_code = 2


class DataError(DecisionEngineError, ValueError):
    """Unusable input data (ingestion, shape, missingness)."""

    exit_code = 3


class ModelSchemaError(DataError):
    """Persisted model does not match the expected JSON schema."""


class NumericError(DecisionEngineError, ArithmeticError):
    """Non-finite value met during training or optimization."""

    exit_code = 4


class PipelineStageError(DecisionEngineError):
    """
    Error raised inside a pipeline stage, tagged with the stage name.

    The exit code is inherited from the wrapped cause.
    """

    def __init__(self, stage: str, cause: Exception) -> None:
        """
        Wrap an error with its pipeline stage.

        Args:
            stage: Stage tag (ingest, impute, transform, split, train, evaluate)
            cause: Original exception
        """
        super().__init__(f"[{stage}] {cause}")
        self.stage = stage
        self.cause = cause

    @property
    def exit_code(self) -> int:  # type: ignore[override]
        """Exit code of the wrapped error."""
        return exit_code_for(self.cause)


def exit_code_for(error: Optional[BaseException]) -> int:
    """
    Map any exception to a CLI exit code.

    Args:
        error: Exception raised by a command

    Returns:
        Exit code (2 config, 3 data, 4 numeric, 1 anything else)
    """
    if isinstance(error, DecisionEngineError):
        return error.exit_code
    return 1
