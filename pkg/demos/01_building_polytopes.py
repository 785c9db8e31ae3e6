"""Build and inspect simple polytopes.

A polytope enters as a half-space intersection with rational data and is
validated on construction: bounded, full-dimensional, simple (every vertex
on exactly n facets), no redundant constraint. Everything downstream keys
off the face lattice computed here.
"""

from gmpy2 import mpq

import polydecomp as pd

# The unit square, straight from a document.
square = pd.parse_polytope({
    "dim": 2,
    "halfspaces": [
        {"a": [-1, 0], "b": 0},
        {"a": [1, 0], "b": 1},
        {"a": [0, -1], "b": 0},
        {"a": [0, 1], "b": 1},
    ],
})
print("square vertices:", [tuple(map(int, v)) for v in square.vertices])
for F in square.faces:
    print(f"  face active={F.active!s:8} dim={F.dim} witness={tuple(map(str, F.witness))}")

# Faces satisfy the alternating-sum relation sum (-1)^dim F = 1.
print("Euler sum:", sum((-1) ** F.dim for F in square.faces))

# Constructors for the usual suspects, plus shape surgery that keeps
# everything simple: products and vertex truncations.
tetra = pd.shapes.simplex(3)
print("3-simplex faces by dim:",
      {d: len(tetra.faces_of_dim(d)) for d in range(4)})

cut = pd.shapes.truncate_vertex(tetra, 0, mpq(1, 3))
print("after truncating a vertex:", len(cut.vertices), "vertices,",
      len(cut.halfspaces), "facets,", len(cut.faces), "faces")

prism = pd.shapes.product(pd.shapes.simplex(2), pd.shapes.interval(0, 1))
print("triangle x interval:", len(prism.vertices), "vertices in dim", prism.dim)

# Exact projections onto face hulls: the residual is orthogonal to the
# face, and projecting twice changes nothing.
edge = square.face([2])  # the edge y = 0
c = (mpq(1, 3), mpq(5, 7))
x = pd.affine_projection(square, edge, c)
print("projection of (1/3, 5/7) onto y=0:", tuple(map(str, x)))
assert pd.affine_projection(square, edge, x) == x

# Invalid inputs fail loudly with typed errors.
try:
    pd.parse_polytope({"dim": 1, "halfspaces": [{"a": [-1], "b": 0}]})
except pd.Unbounded as e:
    print("rejected:", e)
