"""Objective-space primitives: dominance, solutions, and the non-dominated archive.

All objective vectors handled by this package are plain 1-D float numpy arrays
in maximization orientation. Problem backends that minimize negate their raw
costs at the boundary and un-negate when reporting.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np


def as_objectives(values, m: int | None = None) -> np.ndarray:
    """Validate and convert a value sequence into an objective vector.

    Requires at least two finite entries; if m is given the length must match.
    """
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"objective vector must be 1-D, got shape {arr.shape}")
    if arr.size < 2:
        raise ValueError(f"need at least 2 objectives, got {arr.size}")
    if m is not None and arr.size != m:
        raise ValueError(f"expected {m} objectives, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("objective vector contains non-finite entries")
    return arr


def dominates(u, v) -> bool:
    """Strict Pareto dominance: u >= v everywhere and u > v somewhere.

    Both arguments must have the same length. Equal vectors do not dominate
    each other.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape:
        raise ValueError(f"objective count mismatch: {u.shape} vs {v.shape}")
    return bool(np.all(u >= v) and np.any(u > v))


@dataclass
class Solution:
    """A genotype together with its cached objective vector (maximization)."""

    genotype: np.ndarray
    objectives: np.ndarray

    def objective_key(self) -> tuple:
        return tuple(float(x) for x in self.objectives)

    def genotype_key(self) -> bytes:
        return np.asarray(self.genotype).tobytes()


@dataclass
class ArchiveEntry:
    solution: Solution
    explored: bool = False
    history_id: int = 0


class Archive:
    """Mutually non-dominated solution set with explored flags.

    A candidate weakly dominated by a member (dominated, or equal by
    objectives) is rejected; an accepted candidate evicts every member it
    strictly dominates. Single-owner: never shared mutably across workers.
    """

    def __init__(self, entries: Iterable[ArchiveEntry] = ()):
        self.entries: list[ArchiveEntry] = list(entries)
        self._matrix: np.ndarray | None = None

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[ArchiveEntry]:
        return iter(self.entries)

    def objectives_matrix(self) -> np.ndarray:
        if self._matrix is None:
            if self.entries:
                self._matrix = np.array(
                    [e.solution.objectives for e in self.entries], dtype=float
                )
            else:
                self._matrix = np.empty((0, 0))
        return self._matrix

    def weakly_dominates(self, objectives: np.ndarray) -> bool:
        """True if some member dominates `objectives` or equals it."""
        if not self.entries:
            return False
        m = self.objectives_matrix()
        return bool(np.any(np.all(m >= objectives, axis=1)))

    def strictly_dominates(self, objectives: np.ndarray) -> bool:
        """True if some member strictly dominates `objectives`."""
        if not self.entries:
            return False
        m = self.objectives_matrix()
        return bool(
            np.any(np.all(m >= objectives, axis=1) & np.any(m > objectives, axis=1))
        )

    def update(
        self, solution: Solution, history_id: int
    ) -> tuple[bool, list[ArchiveEntry]]:
        """Insert `solution` unless weakly dominated; evict dominated members.

        Returns (accepted, removed_entries). The new entry starts unexplored.
        """
        obj = solution.objectives
        removed: list[ArchiveEntry] = []
        if self.entries:
            m = self.objectives_matrix()
            if np.any(np.all(m >= obj, axis=1)):
                return False, []
            # members weakly dominated by obj are strictly dominated here:
            # an equal member would have rejected obj above
            dominated = np.all(obj >= m, axis=1)
            if dominated.any():
                removed = [e for e, d in zip(self.entries, dominated) if d]
                self.entries = [e for e, d in zip(self.entries, dominated) if not d]
        self.entries.append(ArchiveEntry(solution, explored=False, history_id=history_id))
        self._matrix = None
        return True, removed

    def unexplored(self) -> list[ArchiveEntry]:
        return [e for e in self.entries if not e.explored]

    def find(self, history_id: int) -> ArchiveEntry | None:
        for e in self.entries:
            if e.history_id == history_id:
                return e
        return None

    def mark_all_unexplored(self) -> None:
        for e in self.entries:
            e.explored = False

    def solutions(self) -> list[Solution]:
        return [e.solution for e in self.entries]


def mutually_nondominated(solutions: Sequence[Solution]) -> bool:
    """Check that no solution dominates or duplicates another."""
    for i, a in enumerate(solutions):
        for b in solutions[i + 1 :]:
            if (
                dominates(a.objectives, b.objectives)
                or dominates(b.objectives, a.objectives)
                or a.objective_key() == b.objective_key()
            ):
                return False
    return True


def nondominated_filter(solutions: Iterable[Solution]) -> list[Solution]:
    """Maximal mutually non-dominated, duplicate-free subset of `solutions`.

    The result is canonical (sorted by objectives) so it does not depend on
    input order; among objective-duplicates the solution with the smallest
    genotype byte representation is kept.
    """
    pool = list(solutions)
    if not pool:
        return []
    # deduplicate by objective vector, deterministic representative
    by_key: dict[tuple, Solution] = {}
    for sol in pool:
        key = sol.objective_key()
        kept = by_key.get(key)
        if kept is None or sol.genotype_key() < kept.genotype_key():
            by_key[key] = sol
    uniq = list(by_key.values())
    mat = np.array([s.objectives for s in uniq], dtype=float)
    # strict dominance implies a strictly larger coordinate sum, so a
    # sum-descending pass only needs to test against already-kept points
    order = sorted(range(len(uniq)), key=lambda i: (-float(mat[i].sum()), uniq[i].objective_key()))
    kept_rows: list[np.ndarray] = []
    kept_sols: list[Solution] = []
    for i in order:
        row = mat[i]
        if kept_rows:
            km = np.array(kept_rows)
            if np.any(np.all(km >= row, axis=1) & np.any(km > row, axis=1)):
                continue
        kept_rows.append(row)
        kept_sols.append(uniq[i])
    kept_sols.sort(key=lambda s: s.objective_key())
    return kept_sols
