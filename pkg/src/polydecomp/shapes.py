"""Constructors for standard and derived simple polytopes.

Everything returns a fully validated `SimplePolytope`. The derived
constructions (products, vertex truncations) preserve simplicity, which
makes them handy generators of less symmetric test shapes.
"""

from gmpy2 import mpq

from . import linalg
from .decompose import edge_frame
from .errors import InputError
from .polytope import HalfSpace, SimplePolytope
from .rationals import dot, primitive, rat, vec

__all__ = [
    "interval",
    "cube",
    "simplex",
    "box_polytope",
    "product",
    "truncate_vertex",
]


def interval(lo=-1, hi=1) -> SimplePolytope:
    lo, hi = rat(lo), rat(hi)
    if lo >= hi:
        raise InputError("interval needs lo < hi")
    return SimplePolytope.from_halfspaces(1, [
        HalfSpace.make((-1,), -lo),
        HalfSpace.make((1,), hi),
    ])


def box_polytope(lower, upper) -> SimplePolytope:
    lower, upper = vec(lower), vec(upper)
    n = len(lower)
    hs = []
    for i in range(n):
        e = [0] * n
        e[i] = -1
        hs.append(HalfSpace.make(tuple(e), -lower[i]))
        e[i] = 1
        hs.append(HalfSpace.make(tuple(e), upper[i]))
    return SimplePolytope.from_halfspaces(n, hs)


def cube(n, side=1) -> SimplePolytope:
    return box_polytope([0] * n, [side] * n)


def simplex(n) -> SimplePolytope:
    """Standard simplex {x >= 0, sum x <= 1}."""
    hs = []
    for i in range(n):
        e = [0] * n
        e[i] = -1
        hs.append(HalfSpace.make(tuple(e), 0))
    hs.append(HalfSpace.make((1,) * n, 1))
    return SimplePolytope.from_halfspaces(n, hs)


def triangle() -> SimplePolytope:
    return simplex(2)


def product(P: SimplePolytope, Q: SimplePolytope) -> SimplePolytope:
    """Cartesian product; simple when both factors are."""
    n, m = P.dim, Q.dim
    hs = [HalfSpace(h.normal + (0,) * m, h.offset) for h in P.halfspaces]
    hs += [HalfSpace((0,) * n + h.normal, h.offset) for h in Q.halfspaces]
    return SimplePolytope.from_halfspaces(n + m, hs)


def truncate_vertex(P: SimplePolytope, vertex_id: int, depth) -> SimplePolytope:
    """Cut one vertex with a hyperplane through the interiors of its edges.

    `depth` in (0, 1) places the cut at that fraction of the shortest edge
    gap, so the result is again simple.
    """
    depth = rat(depth)
    if not (0 < depth < 1):
        raise InputError("depth must lie strictly between 0 and 1")
    v = P.vertices[vertex_id]
    frame = edge_frame(P, vertex_id)
    gens = [[mpq(x) for x in g] for g in frame.generators]
    dual = linalg.invert([[g[r] for g in gens] for r in range(P.dim)])
    normal = primitive(tuple(-sum(row[j] for row in dual) for j in range(P.dim)))
    level_v = dot(normal, v)
    gap = None
    for w in P.vertices:
        lw = dot(normal, w)
        if lw < level_v and (gap is None or level_v - lw < gap):
            gap = level_v - lw
    offset = level_v - depth * gap
    return SimplePolytope.from_halfspaces(
        P.dim, list(P.halfspaces) + [HalfSpace.make(normal, offset)])
