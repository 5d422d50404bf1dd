"""Seeded random rational polytopes for property campaigns."""
from __future__ import annotations

import random
from fractions import Fraction

from .errors import InvalidInput
from .polytope import Polytope, hull

DENOMINATORS = (1, 1, 2, 3)


def random_point(rng: random.Random, d: int, radius: int = 4) -> tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(-radius, radius), rng.choice(DENOMINATORS)) for _ in range(d))


def random_polytope(rng: random.Random, d: int, max_vertices: int = 10, radius: int = 4) -> Polytope:
    """Full-dimensional polytope with at most ``max_vertices`` vertices.

    Flat draws are rejected and resampled, so the result is always big.
    """
    if not 1 <= d <= 4:
        raise InvalidInput(f"generator supports 1 <= d <= 4, got {d}")
    if max_vertices < d + 1:
        raise InvalidInput(f"need at least {d + 1} vertices in dimension {d}")
    while True:
        n = rng.randint(d + 1, max_vertices)
        P = hull([random_point(rng, d, radius) for _ in range(n)], d)
        if P.is_full_dimensional:
            return P


def random_polytopes(seed: int, d: int, max_vertices: int, count: int) -> list[Polytope]:
    rng = random.Random(seed)
    return [random_polytope(rng, d, max_vertices) for _ in range(count)]


def random_pairs(seed: int, dims=(2, 3), max_vertices: int = 10, count: int = 200):
    """Deterministic list of ``(P, Q)`` pairs cycling through ``dims``."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        d = dims[k % len(dims)]
        out.append((random_polytope(rng, d, max_vertices), random_polytope(rng, d, max_vertices)))
    return out
