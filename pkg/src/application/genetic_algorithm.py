"""
Real-coded genetic algorithm.

Minimization is the primitive; `maximize` wraps it. Every generation runs
tournament selection, blend crossover, per-gene Gaussian mutation, clamping to
the bounds and elitism. All randomness comes from one generator seeded by the
config, so equal inputs give identical reports.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional

import numpy as np

from domain.exceptions import ConfigError, NumericError
from domain.value_objects.ga_config import GaConfig, GaReport

logger = logging.getLogger(__name__)

Fitness = Callable[[np.ndarray], float]
PopulationFitness = Callable[[np.ndarray], np.ndarray]


class GeneticAlgorithm:
    """
    Seeded real-valued GA over a box.

    Population fitness may be evaluated one genome at a time (optionally in a
    thread pool) or in a single vectorized call. The search itself never
    depends on evaluation order.
    """

    def __init__(self, config: GaConfig, max_workers: int = 1):
        """
        Initialize the algorithm.

        Args:
            config: GA settings with a non-empty bounds box
            max_workers: Threads used by `run` to evaluate a population

        Raises:
            ConfigError: If the config has no bounds or max_workers < 1
        """
        if config.genome_length == 0:
            raise ConfigError("ga.bounds is empty: the genome box must be supplied")
        if max_workers < 1:
            raise ConfigError(f"max_workers must be >= 1, got {max_workers}")
        self.config = config
        self.max_workers = max_workers
        self._lows = config.lows()
        self._highs = config.highs()
        self._ranges = self._highs - self._lows

    def run(self, fitness: Fitness, initial_population: Optional[np.ndarray] = None) -> GaReport:
        """
        Minimize a per-genome fitness function.

        Args:
            fitness: Pure function genome -> real
            initial_population: Optional starting population (population_size x genes)

        Returns:
            GaReport with the best genome ever evaluated

        Raises:
            NumericError: If a fitness value is not finite
        """

        def evaluate(population: np.ndarray) -> np.ndarray:
            genomes = [row.copy() for row in population]
            if self.max_workers > 1:
                with ThreadPoolExecutor(max_workers=self.max_workers) as pool:
                    values = list(pool.map(fitness, genomes))
            else:
                values = [fitness(g) for g in genomes]
            return np.asarray(values, dtype=np.float64)

        return self._evolve(evaluate, initial_population)

    def run_batch(
        self,
        population_fitness: PopulationFitness,
        initial_population: Optional[np.ndarray] = None,
    ) -> GaReport:
        """
        Minimize with a vectorized fitness: population matrix -> fitness vector.

        Same search as `run`; only the evaluation call differs.
        """

        def evaluate(population: np.ndarray) -> np.ndarray:
            values = np.asarray(population_fitness(population.copy()), dtype=np.float64).reshape(-1)
            if values.size != population.shape[0]:
                raise ConfigError(
                    f"population fitness returned {values.size} value(s) "
                    f"for {population.shape[0]} genome(s)"
                )
            return values

        return self._evolve(evaluate, initial_population)

    def _initial_population(self, rng: np.random.Generator, initial: Optional[np.ndarray]) -> np.ndarray:
        shape = (self.config.population_size, self.config.genome_length)
        if initial is None:
            return rng.uniform(self._lows, self._highs, size=shape)
        population = np.array(initial, dtype=np.float64)
        if population.shape != shape:
            raise ConfigError(f"initial population has shape {population.shape}, expected {shape}")
        return np.clip(population, self._lows, self._highs)

    def _checked(self, evaluate: Callable, population: np.ndarray) -> np.ndarray:
        values = evaluate(population)
        bad = np.flatnonzero(~np.isfinite(values))
        if bad.size:
            genome = population[bad[0]].tolist()
            raise NumericError(f"non-finite fitness {values[bad[0]]} for genome {genome}")
        return values

    def _select(self, rng: np.random.Generator, fitness: np.ndarray, count: int) -> np.ndarray:
        """Tournament winners (indices); ties go to the first contender drawn."""
        contenders = rng.integers(0, fitness.size, size=(count, self.config.tournament_size))
        winners = np.argmin(fitness[contenders], axis=1)
        return contenders[np.arange(count), winners]

    def _offspring(self, rng: np.random.Generator, population: np.ndarray, fitness: np.ndarray) -> np.ndarray:
        cfg = self.config
        n_children = cfg.population_size - cfg.elitism_count
        n_pairs = (n_children + 1) // 2

        parents = population[self._select(rng, fitness, 2 * n_pairs)]
        first, second = parents[0::2], parents[1::2]

        alpha = rng.random((n_pairs, 1))
        crossover = rng.random((n_pairs, 1)) < cfg.crossover_rate
        child_a = np.where(crossover, alpha * first + (1.0 - alpha) * second, first)
        child_b = np.where(crossover, (1.0 - alpha) * first + alpha * second, second)
        children = np.empty((2 * n_pairs, cfg.genome_length))
        children[0::2] = child_a
        children[1::2] = child_b

        mutate = rng.random(children.shape) < cfg.mutation_rate
        noise = rng.normal(0.0, 1.0, size=children.shape) * (cfg.mutation_sigma * self._ranges)
        children = np.where(mutate, children + noise, children)
        return np.clip(children[:n_children], self._lows, self._highs)

    def _evolve(self, evaluate: Callable, initial: Optional[np.ndarray]) -> GaReport:
        cfg = self.config
        rng = np.random.default_rng(cfg.seed)

        population = self._initial_population(rng, initial)
        fitness = self._checked(evaluate, population)

        best_index = int(np.argmin(fitness))
        best_genome = population[best_index].copy()
        best_fitness = float(fitness[best_index])
        trace = [best_fitness]

        for generation in range(1, cfg.generations + 1):
            elite = np.argsort(fitness, kind="stable")[: cfg.elitism_count]
            children = self._offspring(rng, population, fitness)
            child_fitness = self._checked(evaluate, children)

            population = np.vstack([population[elite], children])
            fitness = np.concatenate([fitness[elite], child_fitness])

            index = int(np.argmin(fitness))
            generation_best = float(fitness[index])
            trace.append(generation_best)
            if generation_best < best_fitness:
                best_fitness = generation_best
                best_genome = population[index].copy()
            logger.debug("generation=%d best=%.8g", generation, generation_best)

        logger.debug("ga finished generations=%d best=%.6g", cfg.generations, best_fitness)
        return GaReport(tuple(float(g) for g in best_genome), best_fitness, tuple(trace))


def run(
    fitness: Fitness,
    config: GaConfig,
    initial_population: Optional[np.ndarray] = None,
    max_workers: int = 1,
) -> GaReport:
    """
    Minimize `fitness` over `config.bounds`.

    Args:
        fitness: Pure function genome -> real (minimized)
        config: GA settings
        initial_population: Optional starting population
        max_workers: Threads for population evaluation; results do not depend on it

    Returns:
        GaReport with the best genome ever seen
    """
    return GeneticAlgorithm(config, max_workers).run(fitness, initial_population)


def run_batch(
    population_fitness: PopulationFitness,
    config: GaConfig,
    initial_population: Optional[np.ndarray] = None,
) -> GaReport:
    """Minimize a vectorized population fitness over `config.bounds`."""
    return GeneticAlgorithm(config).run_batch(population_fitness, initial_population)


def maximize(
    fitness: Fitness,
    config: GaConfig,
    initial_population: Optional[np.ndarray] = None,
    max_workers: int = 1,
) -> GaReport:
    """
    Maximize `fitness` by minimizing its negation.

    The report holds un-negated values: best_fitness is the largest value
    found and the trace is non-decreasing under elitism.
    """
    report = run(lambda g: -fitness(g), config, initial_population, max_workers)
    return GaReport(
        report.best_genome,
        -report.best_fitness,
        tuple(-value for value in report.fitness_trace),
    )
