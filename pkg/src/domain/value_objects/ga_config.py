"""
Genetic algorithm configuration and report value objects.
"""
from dataclasses import dataclass, field, replace
from typing import Sequence, Tuple

import numpy as np

from domain.exceptions import ConfigError

Bounds = Tuple[Tuple[float, float], ...]


@dataclass(frozen=True)
class GaConfig:
    """
    Real-coded GA settings.

    `mutation_sigma` is a fraction of each gene's range. An empty `bounds`
    tuple marks a template whose genome box is supplied later (imputation
    derives it per row).
    """

    population_size: int = 50
    generations: int = 200
    crossover_rate: float = 0.9
    mutation_rate: float = 0.1
    mutation_sigma: float = 0.1
    tournament_size: int = 3
    elitism_count: int = 1
    bounds: Bounds = ()
    seed: int = 0

    def __post_init__(self) -> None:
        bounds = tuple((float(lo), float(hi)) for lo, hi in self.bounds)
        object.__setattr__(self, "bounds", bounds)
        if self.population_size < 2:
            raise ConfigError(f"population_size must be >= 2, got {self.population_size}")
        if self.generations < 1:
            raise ConfigError(f"generations must be >= 1, got {self.generations}")
        if not 0.0 <= self.crossover_rate <= 1.0:
            raise ConfigError(f"crossover_rate must lie in [0, 1], got {self.crossover_rate}")
        if not 0.0 <= self.mutation_rate <= 1.0:
            raise ConfigError(f"mutation_rate must lie in [0, 1], got {self.mutation_rate}")
        if not self.mutation_sigma > 0.0:
            raise ConfigError(f"mutation_sigma must be positive, got {self.mutation_sigma}")
        if self.tournament_size < 1:
            raise ConfigError(f"tournament_size must be >= 1, got {self.tournament_size}")
        if not 0 <= self.elitism_count < self.population_size:
            raise ConfigError(
                f"elitism_count must lie in [0, population_size), got {self.elitism_count}"
            )
        if self.seed < 0:
            raise ConfigError(f"seed must be unsigned, got {self.seed}")
        for gene, (low, high) in enumerate(bounds):
            if not (np.isfinite(low) and np.isfinite(high) and low < high):
                raise ConfigError(f"bounds[{gene}]: need finite low < high, got ({low}, {high})")

    @property
    def genome_length(self) -> int:
        """Number of genes."""
        return len(self.bounds)

    def lows(self) -> np.ndarray:
        """Lower bound per gene."""
        return np.array([lo for lo, _ in self.bounds], dtype=np.float64)

    def highs(self) -> np.ndarray:
        """Upper bound per gene."""
        return np.array([hi for _, hi in self.bounds], dtype=np.float64)

    def with_bounds(self, bounds: Sequence[Tuple[float, float]]) -> "GaConfig":
        """Create a copy searching another box."""
        return replace(self, bounds=tuple(bounds))

    def with_seed(self, seed: int) -> "GaConfig":
        """Create a copy with another seed."""
        return replace(self, seed=seed)

    def to_dict(self) -> dict:
        """Serialize for reports."""
        return {
            "population_size": self.population_size,
            "generations": self.generations,
            "crossover_rate": self.crossover_rate,
            "mutation_rate": self.mutation_rate,
            "mutation_sigma": self.mutation_sigma,
            "tournament_size": self.tournament_size,
            "elitism_count": self.elitism_count,
            "bounds": [list(pair) for pair in self.bounds],
            "seed": self.seed,
        }


@dataclass(frozen=True)
class GaReport:
    """
    Best genome ever seen and the generation-best fitness trace.

    The trace starts with the initial population's best, then one entry per
    generation. With elitism it never increases (minimization).
    """

    best_genome: Tuple[float, ...]
    best_fitness: float
    fitness_trace: Tuple[float, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        """Serialize for reports."""
        return {
            "best_genome": list(self.best_genome),
            "best_fitness": self.best_fitness,
            "fitness_trace": list(self.fitness_trace),
        }
