"""Exact clipping of half-space regions by boxes, and exact volumes.

Clipping drives the measure-identity checks, where the same (usually
unbounded) cell is cut by many sample boxes, so the work that depends only
on the cell is hoisted into a reusable `CellClipper`.

A vertex of cell-and-box has a tight set formed by j cell constraints plus
n - j box bounds on distinct coordinates; conversely every invertible
system of that shape is solvable with the box bounds eliminated first,
leaving a j x j system in the free coordinates whose inverse does not
depend on the box. `CellClipper` precomputes those inverses once; `clip`
then enumerates candidate tight sets, back-substitutes, and keeps the
feasible solutions with their full incidence data.

Volumes use the base-vertex fan: pick a vertex, triangulate every facet
that misses it (recursively, one dimension down), and sum |det|/n! over
the resulting simplices. Lower-dimensional and empty clips have volume 0.
"""

from dataclasses import dataclass
from itertools import combinations, product

from gmpy2 import mpq

from . import linalg
from .polytope import Box, HalfSpace

ZERO = mpq(0)

__all__ = ["ClippedPolytope", "CellClipper", "clip", "exact_volume"]


@dataclass
class ClippedPolytope:
    """Bounded intersection with vertices and a vertex-constraint incidence table.

    Not necessarily simple, full-dimensional, or nonempty. `halfspaces`
    lists the cell constraints first, then the 2n box bounds.
    """

    dim: int
    halfspaces: tuple
    vertices: tuple
    tight: tuple  # frozenset of constraint indices per vertex

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def full_dimensional(self) -> bool:
        if len(self.vertices) < self.dim + 1:
            return False
        base = self.vertices[0]
        diffs = [tuple(a - b for a, b in zip(v, base)) for v in self.vertices[1:]]
        return linalg.rank(diffs) == self.dim


class CellClipper:
    """Clips one fixed half-space list by many boxes."""

    def __init__(self, halfspaces, dim):
        cons = []
        seen = set()
        for h in halfspaces:
            if not isinstance(h, HalfSpace):
                h = HalfSpace.make(*h)
            if h.key() not in seen:
                seen.add(h.key())
                cons.append(h)
        self.dim = dim
        self.cons = cons
        self._norms = [tuple(h.normal) for h in cons]
        self._offs = [h.offset for h in cons]
        self._systems = self._prepare()

    def _prepare(self):
        """All (S, T, inverse) with S cell rows, T free coords, A[S,T] invertible."""
        n = self.dim
        k = len(self.cons)
        systems = []
        for j in range(1, min(k, n) + 1):
            for S in combinations(range(k), j):
                rows = [self._norms[i] for i in S]
                for T in combinations(range(n), j):
                    sub = [[r[c] for c in T] for r in rows]
                    inv = linalg.invert(sub)
                    if inv is not None:
                        systems.append((S, T, rows, inv))
        return systems

    def clip(self, box: Box) -> ClippedPolytope:
        n = self.dim
        norms, offs = self._norms, self._offs
        lower, upper = box.lower, box.upper
        points = set()

        for corner in product(*zip(lower, upper)):
            if all(sum(a * x for a, x in zip(r, corner)) <= o for r, o in zip(norms, offs)):
                points.add(corner)

        for S, T, rows, inv in self._systems:
            j = len(S)
            fixed = [c for c in range(n) if c not in set(T)]
            for choice in product(*[(lower[c], upper[c]) for c in fixed]):
                rhs = []
                for idx, r in zip(S, rows):
                    s = offs[idx]
                    for c, xc in zip(fixed, choice):
                        s -= r[c] * xc
                    rhs.append(s)
                free_vals = [sum(inv[i][t] * rhs[t] for t in range(j)) for i in range(j)]
                ok = True
                for c, v in zip(T, free_vals):
                    if v < lower[c] or v > upper[c]:
                        ok = False
                        break
                if not ok:
                    continue
                pt = [ZERO] * n
                for c, v in zip(T, free_vals):
                    pt[c] = v
                for c, v in zip(fixed, choice):
                    pt[c] = v
                pt = tuple(pt)
                for r, o in zip(norms, offs):
                    if sum(a * x for a, x in zip(r, pt)) > o:
                        ok = False
                        break
                if ok:
                    points.add(pt)

        verts = sorted(points)
        allcons = list(self.cons) + box.halfspaces()
        tight = []
        for p in verts:
            tight.append(frozenset(i for i, h in enumerate(allcons) if h.value(p) == 0))
        return ClippedPolytope(n, tuple(allcons), tuple(verts), tuple(tight))


def clip(halfspaces, box: Box) -> ClippedPolytope:
    """One-shot clip of a half-space list by a box."""
    return CellClipper(halfspaces, box.dim).clip(box)


def exact_volume(Q: ClippedPolytope):
    """Exact Lebesgue volume of a clipped polytope (0 if empty or thin)."""
    n = Q.dim
    if len(Q.vertices) < n + 1:
        return ZERO
    simplices = _triangulate(Q, frozenset(range(len(Q.vertices))), n)
    total = ZERO
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    base_cache = Q.vertices
    for simplex in simplices:
        p0 = base_cache[simplex[0]]
        rows = [tuple(base_cache[i][c] - p0[c] for c in range(n)) for i in simplex[1:]]
        d = linalg.det(rows)
        if d < 0:
            d = -d
        total += d
    return total / fact


def _triangulate(Q, vset, d):
    """d-simplices (as vertex-id tuples) fanning conv(vset) from its least vertex."""
    v0 = min(vset)
    if d == 0:
        return [(v0,)]
    out = []
    seen = set()
    t0 = Q.tight[v0]
    for ci in range(len(Q.halfspaces)):
        if ci in t0:
            continue
        facet = frozenset(v for v in vset if ci in Q.tight[v])
        if len(facet) < d or facet in seen:
            continue
        seen.add(facet)
        for s in _triangulate(Q, facet, d - 1):
            out.append((v0,) + s)
    return out
