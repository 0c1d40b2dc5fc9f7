"""Sphere and ball volumes in the sum-rank metric.

The ambient space is F_{q^m}^n split into ell blocks of length eta, so
n = ell*eta and each block has rank at most mu = min(m, eta). The production
path tabulates the full weight distribution by an ell-fold convolution of the
single-block rank distribution; a direct sum over rank profiles is kept as an
independent reference.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod

from sumrank.compositions import enumerate_uniform
from sumrank.qkit import num_matrices_rank


@dataclass(frozen=True)
class Params:
    """Ambient-space parameters (q, m, eta, ell) with derived n and mu."""

    q: int
    m: int
    eta: int
    ell: int

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError(f"q must be >= 2, got {self.q}")
        for name in ("m", "eta", "ell"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")

    @property
    def n(self) -> int:
        return self.ell * self.eta

    @property
    def mu(self) -> int:
        return min(self.m, self.eta)

    @property
    def space_size(self) -> int:
        return self.q ** (self.m * self.n)

    @property
    def max_weight(self) -> int:
        return self.ell * self.mu


def block_rank_distribution(p: Params) -> list[int]:
    """Counts of single-block vectors by rank, indexed 0..mu."""
    return [num_matrices_rank(p.eta, p.m, r, p.q) for r in range(p.mu + 1)]


@lru_cache(maxsize=None)
def weight_distribution(p: Params) -> tuple[int, ...]:
    """Sphere volumes for every radius 0..ell*mu, by convolution.

    Entry t is the number of vectors of sum-rank weight exactly t. The
    per-block rank distribution is convolved ell times (polynomial
    multiplication with exact integer coefficients).
    """
    block = block_rank_distribution(p)
    dist = [1]
    for _ in range(p.ell):
        new = [0] * (len(dist) + p.mu)
        for w, c in enumerate(dist):
            if c == 0:
                continue
            for r, b in enumerate(block):
                new[w + r] += c * b
        dist = new
    return tuple(dist)


def sphere_volume(p: Params, t: int) -> int:
    """Number of vectors at sum-rank weight exactly t; 0 beyond ell*mu."""
    if t < 0:
        raise ValueError("radius must be nonnegative")
    if t > p.max_weight:
        return 0
    return weight_distribution(p)[t]


def sphere_volume_by_profiles(p: Params, t: int) -> int:
    """Reference evaluation: sum over rank profiles of per-block counts.

    Same value as sphere_volume; kept independent of the convolution path
    for cross-checking.
    """
    if t < 0:
        raise ValueError("radius must be nonnegative")
    return sum(
        prod(num_matrices_rank(p.eta, p.m, ti, p.q) for ti in profile)
        for profile in enumerate_uniform(t, p.ell, p.mu)
    )


def ball_volume(p: Params, t: int) -> int:
    """Number of vectors at sum-rank weight at most t.

    Radii beyond ell*mu clamp to the whole space q^{mn}.
    """
    if t < 0:
        raise ValueError("radius must be nonnegative")
    dist = weight_distribution(p)
    return sum(dist[: min(t, p.max_weight) + 1])
