"""Seeded random draws of rationals, torus points and lattice configurations."""

from __future__ import annotations

import random
from fractions import Fraction

from .lattice_geometry import LatticeConfiguration


def random_rational(rng: random.Random, bound: int = 50, max_den: int = 10) -> Fraction:
    """Nonzero rational in ``[-bound, bound]`` with denominator at most ``max_den``."""
    q = rng.randint(1, max_den)
    p = 0
    while p == 0:
        p = rng.randint(-bound * q, bound * q)
    return Fraction(p, q)


def random_torus_point(rng: random.Random, d: int, bound: int = 50, max_den: int = 10
                       ) -> tuple[Fraction, ...]:
    return tuple(random_rational(rng, bound, max_den) for _ in range(d))


def random_configuration(rng: random.Random, d: int, size: int, box: int = 3) -> LatticeConfiguration:
    pts = set()
    while len(pts) < size:
        pts.add(tuple(rng.randint(0, box) for _ in range(d)))
    return LatticeConfiguration(d, pts)
