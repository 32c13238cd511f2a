"""Uniform problem-backend interface for the search algorithms.

Backends expose evaluation, a move-based neighborhood with incremental
(delta) objective computation, and random solution generation. Internally
every backend is a maximization problem; minimizing backends negate their
raw costs and convert back in `report_objectives`.
"""

from __future__ import annotations

import abc
from typing import Iterator

import numpy as np

from ..core import Solution


class Problem(abc.ABC):
    """Immutable problem instance; shared read-only across workers."""

    m: int
    n: int
    orientation: str  # "maximize" or "minimize"

    @abc.abstractmethod
    def evaluate(self, genotype) -> np.ndarray:
        """Full evaluation of a genotype into internal (maximization) objectives."""

    @abc.abstractmethod
    def random_solution(self, rng: np.random.Generator) -> Solution:
        ...

    @abc.abstractmethod
    def neighborhood_size(self) -> int:
        ...

    @abc.abstractmethod
    def neighbor_moves(
        self, genotype, objectives, rng: np.random.Generator | None = None
    ) -> Iterator[tuple[np.ndarray, object]]:
        """Yield (neighbor objectives, move) pairs, one per neighbor.

        Enumeration is in a fixed index order rotated by a random starting
        offset drawn from `rng` (offset 0 when rng is None). Objectives are
        computed incrementally and must match full re-evaluation.
        """

    @abc.abstractmethod
    def apply_move(self, genotype, move):
        """Materialize the genotype reached by `move` (fresh copy)."""

    def make_solution(self, genotype) -> Solution:
        return Solution(genotype=genotype, objectives=self.evaluate(genotype))

    def report_objectives(self, objectives: np.ndarray) -> np.ndarray:
        """Convert internal objectives back to raw, orientation-original values."""
        if self.orientation == "minimize":
            return -np.asarray(objectives, dtype=float)
        return np.asarray(objectives, dtype=float)

    def internalize(self, raw_objectives) -> np.ndarray:
        """Convert raw objective values to the internal maximization form."""
        raw = np.asarray(raw_objectives, dtype=float)
        return -raw if self.orientation == "minimize" else raw

    @abc.abstractmethod
    def describe(self) -> dict:
        """Self-describing metadata for result files."""

    @abc.abstractmethod
    def genotype_to_list(self, genotype) -> list:
        ...

    @abc.abstractmethod
    def genotype_from_list(self, values) -> np.ndarray:
        ...
