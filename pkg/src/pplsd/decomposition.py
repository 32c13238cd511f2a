"""Weight vectors, angle-based subregions, and the Tchebycheff scalar objective.

A decomposition splits the objective space into L angular subregions around a
shared reference point z*, one per weight vector. Each subregion also carries
a scalar objective (Tchebycheff form, maximized) used to guide search inside
it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb

import numpy as np

# floor for weight components when inverting them in the scalar objective;
# boundary weights like (1, 0) would otherwise divide by zero
TCHEBYCHEFF_EPS = 1e-6


def generate_weights(m: int, h: int) -> np.ndarray:
    """All m-part weight vectors with components from {0/h, ..., h/h} summing to 1.

    Returned as an (L, m) array in lexicographic component order, where
    L = C(h+m-1, m-1). For example m=2, h=2 gives (0,1), (0.5,0.5), (1,0).
    """
    if m < 2:
        raise ValueError(f"need at least 2 objectives, got m={m}")
    if h < 1:
        raise ValueError(f"granularity must be >= 1, got h={h}")
    rows: list[tuple[int, ...]] = []

    def build(prefix: tuple[int, ...], remaining: int, parts: int) -> None:
        if parts == 1:
            rows.append(prefix + (remaining,))
            return
        for first in range(remaining + 1):
            build(prefix + (first,), remaining - first, parts - 1)

    build((), h, m)
    weights = np.array(rows, dtype=float) / h
    assert weights.shape[0] == comb(h + m - 1, m - 1)
    return weights


def acute_angle(u, v) -> float:
    """Angle in [0, pi] between two vectors via clamped cosine similarity.

    The angle of a zero vector is defined as 0 (equal against everything),
    which lets callers fall through to their tie rules.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        return 0.0
    cos = float(np.dot(u, v)) / (nu * nv)
    return float(np.arccos(np.clip(cos, -1.0, 1.0)))


def tchebycheff(objectives, lam, z_star) -> float:
    """Tchebycheff scalar value min_k (f_k - z*_k) / max(lam_k, eps); larger is better."""
    f = np.asarray(objectives, dtype=float)
    lam = np.asarray(lam, dtype=float)
    z = np.asarray(z_star, dtype=float)
    if not (f.shape == lam.shape == z.shape):
        raise ValueError("objective, weight and reference vectors must share a length")
    return float(np.min((f - z) / np.maximum(lam, TCHEBYCHEFF_EPS)))


@dataclass(frozen=True)
class DecompositionScheme:
    """Immutable bundle of weight vectors and the shared reference point.

    `h` is the granularity the weights were generated from, or None for
    hand-built schemes. Freely shareable read-only across workers.
    """

    m: int
    h: int | None
    weights: np.ndarray  # (L, m)
    z_star: np.ndarray  # (m,)

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        z = np.asarray(self.z_star, dtype=float)
        if w.ndim != 2 or w.shape[1] != self.m:
            raise ValueError(f"weights must be (L, {self.m}), got {w.shape}")
        if z.shape != (self.m,):
            raise ValueError(f"reference point must have {self.m} entries")
        if np.any(w < 0):
            raise ValueError("weights must be non-negative")
        if np.any(np.abs(w.sum(axis=1) - 1.0) > 1e-12):
            raise ValueError("each weight vector must sum to 1 within 1e-12")
        if not np.all(np.isfinite(z)):
            raise ValueError("reference point must be finite")
        if len({tuple(row) for row in w}) != w.shape[0]:
            raise ValueError("weight vectors must be pairwise distinct")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "z_star", z)

    @classmethod
    def from_h(cls, m: int, h: int, z_star) -> "DecompositionScheme":
        return cls(m=m, h=h, weights=generate_weights(m, h), z_star=np.asarray(z_star, dtype=float))

    @property
    def num_subregions(self) -> int:
        return self.weights.shape[0]

    @cached_property
    def _unit_weights(self) -> np.ndarray:
        norms = np.linalg.norm(self.weights, axis=1)
        return self.weights / norms[:, None]

    def weight(self, index: int) -> np.ndarray:
        return self.weights[index]

    def scalar_value(self, objectives, index: int) -> float:
        return tchebycheff(objectives, self.weights[index], self.z_star)


def subregion_index(objectives, scheme: DecompositionScheme) -> int:
    """Index of the subregion containing an objective vector.

    Returns the index (0-based) of the weight vector with the smallest acute
    angle to `objectives - z_star`; ties, including the degenerate point at
    z_star itself, go to the smallest index.
    """
    v = np.asarray(objectives, dtype=float) - scheme.z_star
    norm = float(np.linalg.norm(v))
    if norm == 0.0:
        return 0
    cos = np.clip(scheme._unit_weights @ v / norm, -1.0, 1.0)
    angles = np.arccos(cos)
    return int(np.argmin(angles))
