"""Seeded random t-spread Borel ideals for verification grids."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .ideals import MonomialIdeal, borel_closure
from .monomials import SpreadVector, enumerate_spread


@dataclass(frozen=True)
class GridBounds:
    n_max: int = 9
    d_max: int = 4
    t_max: int = 3
    max_gens: int = 12
    max_seeds: int = 3


def random_borel_ideal(
    rng: random.Random, bounds: GridBounds = GridBounds()
) -> tuple[MonomialIdeal, SpreadVector]:
    """Draw t, n and up to ``max_seeds`` t-spread seeds, then close them."""
    while True:
        d = rng.randint(2, bounds.d_max)
        t = SpreadVector(tuple(rng.randint(0, bounds.t_max) for _ in range(d - 1)))
        n = rng.randint(2, bounds.n_max)
        pools = [enumerate_spread(n, ell, t) for ell in range(1, d + 1)]
        pools = [p for p in pools if p]
        # Prefer higher degrees; degree-one seeds swallow everything below them.
        weights = [ell for ell in range(1, len(pools) + 1)]
        seeds = []
        for _ in range(rng.randint(1, bounds.max_seeds)):
            pool = rng.choices(pools, weights=weights)[0]
            seeds.append(rng.choice(pool))
        I = borel_closure(seeds, t, n)
        if not 1 <= len(I) <= bounds.max_gens:
            continue
        # Keep the grid from being dominated by principal and two-generator ideals.
        if len(I) <= 2 and rng.random() < 0.5:
            continue
        return I, t


def random_grid(
    count: int, seed: int = 0, bounds: GridBounds = GridBounds()
) -> list[tuple[MonomialIdeal, SpreadVector]]:
    rng = random.Random(seed)
    return [random_borel_ideal(rng, bounds) for _ in range(count)]
