"""Admissible centers and per-face level data.

The norm-square decomposition needs a center whose nearest point on every
face is relatively interior. Because the projection onto a face's hull is
an affine map of the center, the search is an exact linear program:
maximize the worst-case slack over all (face, inactive constraint) pairs.
"""

from gmpy2 import mpq

import polydecomp as pd

for name, P in [
    ("interval", pd.shapes.interval(-1, 1)),
    ("square", pd.shapes.cube(2)),
    ("2-simplex", pd.shapes.simplex(2)),
    ("3-simplex", pd.shapes.simplex(3)),
    ("truncated 3-simplex", pd.shapes.truncate_vertex(pd.shapes.simplex(3), 0, mpq(1, 4))),
]:
    c, margin = pd.admissible_center(P)
    report = pd.check_assumption(P, c)
    print(f"{name:20} center={tuple(map(str, c))}  margin={margin}  "
          f"faces passing: {sum(r.passed for r in report)}/{len(report)}")

# A center that fails: projections escape their faces, and the failing
# faces are named.
tri = pd.shapes.simplex(2)
bad = pd.check_assumption(tri, (2, 2))
print("center (2,2) on the 2-simplex fails on faces:",
      [list(r.face_active) for r in bad if not r.passed])
try:
    pd.witten(tri, (2, 2))
except pd.AssumptionViolated as e:
    print("norm-square cells refused:", e)

# Per-face (point, level) data: the default uses witnesses and codimension
# levels; an admissible center induces projection points with squared
# distances, strictly increasing into subfaces.
square = pd.shapes.cube(2)
data = pd.morse_data_from_center(square, (mpq(1, 2), mpq(1, 2)))
ok, violations = pd.verify_morse_data(square, data)
print("center-induced levels on the square verify:", ok)
for active, (x, level) in sorted(data.entries.items(), key=lambda kv: len(kv[0])):
    print(f"  face {active!s:8} point={tuple(map(str, x))} level={level}")
