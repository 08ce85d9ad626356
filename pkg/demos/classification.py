"""Saturated planar Chasles configurations up to unimodular equivalence."""
from chasles import classify_planar_saturated_chasles

classes = classify_planar_saturated_chasles()
print(f"{len(classes)} classes")
for c in sorted(classes, key=lambda c: c.invariant_key):
    vol, interior, boundary, nverts, edges = c.invariant_key
    print(f"vol {vol:2d}  boundary {boundary}  vertices {nverts}  edge lengths {edges}  {sorted(c.canonical.points)}")
