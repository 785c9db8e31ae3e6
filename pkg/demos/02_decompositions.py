"""The three signed decompositions of the unit square.

Each writes the polytope's indicator (or Lebesgue measure) as a signed sum
of cone indicators: tangent cones over all faces with alternating signs,
polarized cones over the vertices, or norm-square cells over all faces.
"""

from gmpy2 import mpq

import polydecomp as pd

square = pd.shapes.cube(2)


def show(D, label):
    print(f"{label}: {len(D.cells)} cells")
    for c in D.cells:
        kind, active = c.provenance
        hs = ", ".join(str(h) for h in c.halfspaces) or "all of R^n"
        print(f"  {'+' if c.sign > 0 else '-'} {kind} {active!s:8} [{hs}]")


# One cell per face, sign (-1)^dim: the alternating tangent-cone sum.
bg = pd.brianchon_gram(square)
show(bg, "tangent-cone sum")

# The signed indicators add up to the closed indicator everywhere,
# boundary included.
for x in [(mpq(1, 2), mpq(1, 2)), (1, mpq(1, 2)), (0, 0), (2, 2), (-1, mpq(1, 3))]:
    print(f"  indicator sum at {tuple(map(str, x))}: {pd.indicator_sum(bg, x)}")

# One cell per vertex: flip the edge generators pairing negatively with a
# generic direction; the flip parity is the sign.
lv = pd.lawrence_varchenko(square, (1, 2))
show(lv, "polarized vertex cones, direction (1, 2)")

# Reversing the direction complements every flip.
lv_neg = pd.lawrence_varchenko(square, (-1, -2))
for a, b in zip(lv.cells, lv_neg.cells):
    assert a.flip_count + b.flip_count == square.dim

# Zero pairings are an error, not a silent perturbation.
try:
    pd.lawrence_varchenko(square, (1, 0))
except pd.GenericityFailure as e:
    print("non-generic direction rejected:", e)

# One cell per face again, but flipped against the distance-squared
# gradient from an interior center.
wt = pd.witten(square, (mpq(1, 2), mpq(1, 2)))
show(wt, "norm-square cells, center (1/2, 1/2)")
