"""Pairs of lattice quadrangles whose mixed volume is one more than N.

For each n the structure (P_n, Q_n) is Chasles; a random instance is solved
exactly and the numeric root count is compared with the mixed volume.
"""
import random

from chasles import count_torus_roots, extra_point, family_pq, is_chasles_structure
from chasles.sampling import random_torus_point

rng = random.Random(5)
for n in range(1, 6):
    S = family_pq(n)
    rep = is_chasles_structure(S)
    while True:
        pts = [random_torus_point(rng, 2) for _ in range(S.N)]
        if all(len({p[i] for p in pts}) == S.N for i in range(2)):
            break
    point = extra_point(S, pts).point
    stats = count_torus_roots(S, trials=10, seed=n)
    print(f"n={n}: mvol {rep.mixed_volume}, N {S.N}, extra point ~ ({float(point[0]):.6g}, {float(point[1]):.6g}), "
          f"numeric counts {dict(stats.counts)}")
