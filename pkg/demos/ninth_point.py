"""Eight points in the plane determine a ninth on every cubic through them.

Draws eight random rational points, computes the ninth exactly and compares
it with a numeric intersection of two cubics from the pencil.
"""
import random

from chasles import ChaslesStructure, extra_point, solve_2d
from chasles.sampling import random_torus_point
from chasles.verification import CUBIC

rng = random.Random(2024)
points = [random_torus_point(rng, 2, bound=9, max_den=4) for _ in range(8)]
result = extra_point(ChaslesStructure.from_configuration(CUBIC), points)

print("given points:")
for p in points:
    print("  ", tuple(str(c) for c in p))
print("ninth point:", tuple(str(c) for c in result.point))
print("cubic basis evaluated there:", [str(f.evaluate(result.point)) for f in result.basis])

roots = solve_2d(*result.basis)
root, dist = roots.nearest(result.point)
print(f"numeric solver: {roots.total_multiplicity} torus roots, nearest to the ninth point at relative distance {dist:.1e}")
