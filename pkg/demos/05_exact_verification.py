"""Exact verification: no tolerances anywhere.

Signed decompositions are piecewise-Lebesgue measures; evaluating them on
boxes determines them. Both checks below are exact rational identities on
seeded samples; the float Monte-Carlo estimate exists only to cross-check
the exact volume code through an independent route.
"""

import polydecomp as pd
from polydecomp.clipping import clip, exact_volume
from polydecomp.polytope import Box

P = pd.shapes.truncate_vertex(pd.shapes.simplex(3), 2, "1/3")
print(f"fixture: truncated 3-simplex, {len(P.vertices)} vertices, "
      f"{len(P.faces)} faces")

# Exact volume of a clip, cross-checked by sampling.
box = pd.bounding_box(P, 2)
vol = exact_volume(clip(P.halfspaces, box))
est, sigma = pd.monte_carlo_volume(P.halfspaces, box, 100_000, seed=7)
print(f"exact volume {vol} = {float(vol):.6f};  "
      f"Monte-Carlo {est:.6f} +- {sigma:.6f} (within 3 sigma: "
      f"{abs(est - float(vol)) <= 3 * sigma})")

# The measure identity, cell by cell, box by box.
center, margin = pd.admissible_center(P)
for label, D in [
    ("tangent-cone sum", pd.brianchon_gram(P)),
    ("polarized cones", pd.lawrence_varchenko(P, (1, 3, 9))),
    ("norm-square cells", pd.witten(P, center)),
]:
    ms = pd.verify_measure(P, D, 32, seed=7)
    pw = pd.verify_pointwise(P, D, 500, seed=7,
                             avoid_facet_spans=(D.kind != "bg"))
    print(f"{label:18} measure: {'exact pass' if ms.passed else 'FAIL':10} "
          f"pointwise: {'exact pass' if pw.passed else 'FAIL'} "
          f"({ms.samples} boxes, {pw.samples} points)")

# Reports are deterministic documents; rerunning with the same seed gives
# byte-identical output.
r1 = pd.verify_measure(P, pd.brianchon_gram(P), 8, seed=123).to_doc()
r2 = pd.verify_measure(P, pd.brianchon_gram(P), 8, seed=123).to_doc()
print("reports deterministic:", r1 == r2)

# A wrong sign is caught on essentially every box.
from polydecomp.decompose import Decomposition, SignedCell

D = pd.brianchon_gram(P)
cells = [SignedCell(c.halfspaces, -c.sign, c.provenance, c.flip_count + 1)
         if c.provenance[1] == () else c for c in D.cells]
bad = Decomposition(P, "bg", None, tuple(cells))
report = pd.verify_measure(P, bad, 32, seed=7)
print(f"corrupted sign fails {len(report.failures)}/{report.samples} boxes")
