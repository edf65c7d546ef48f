"""Monte Carlo plumbing: seeded estimates with standard errors."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class MCEstimate:
    """A Monte Carlo estimate: value, standard error, sample count, seed."""

    value: float
    stderr: float
    n: int
    seed: int

    def within(self, other: float, k_sigma: float = 3.0, extra: float = 0.0) -> bool:
        return abs(self.value - other) <= k_sigma * self.stderr + extra


def rng_for(seed: int, *path: int) -> np.random.Generator:
    """Deterministic child generator for a (seed, path...) address.

    Sharded work derives per-shard generators from the same root seed, so
    results are reproducible for a fixed (seed, shard count).
    """
    ss = np.random.SeedSequence(entropy=seed, spawn_key=tuple(path))
    return np.random.default_rng(ss)


def ball_volume(k: int, radius: float = 1.0) -> float:
    """Lebesgue volume of a k-ball."""
    from math import gamma, pi
    return pi ** (k / 2.0) / gamma(k / 2.0 + 1.0) * radius ** k


def sample_ball(rng: np.random.Generator, center: np.ndarray, radius: float,
                n: int) -> np.ndarray:
    """n uniform points in the k-ball around center."""
    center = np.asarray(center, dtype=float)
    k = center.shape[0]
    z = rng.standard_normal((n, k))
    z /= np.linalg.norm(z, axis=1, keepdims=True)
    r = radius * rng.random(n) ** (1.0 / k)
    return center + z * r[:, None]


def indicator_mc(frac_hits: float, n: int, volume: float, seed: int) -> MCEstimate:
    """Estimate volume * P(hit) with the binomial standard error."""
    p = frac_hits
    se = volume * np.sqrt(max(p * (1.0 - p), 0.0) / n)
    return MCEstimate(value=volume * p, stderr=float(se), n=n, seed=seed)
