"""Simple rational polytopes in H-representation.

A polytope document looks like

    {"dim": 2,
     "halfspaces": [{"a": [-1, 0], "b": 0}, {"a": [1, 1], "b": "3/2"}, ...]}

with membership meaning a . x <= b, entries integers or "p/q" strings.
Parsing validates the full contract: bounded, full-dimensional, simple,
irredundant. Vertices are found by solving every n-subset of constraints
exactly; faces are the distinct subsets of vertex active sets, which for a
simple polytope is the whole face lattice.
"""

import json
from dataclasses import dataclass
from itertools import combinations

from gmpy2 import mpq

from . import linalg, lp
from .errors import (
    InputError,
    NotFullDimensional,
    NotSimple,
    RedundantHalfSpace,
    Unbounded,
)
from .rationals import ZERO, dot, primitive, rat, rat_str, vec, vec_str, vsub

__all__ = [
    "HalfSpace",
    "Box",
    "Face",
    "SimplePolytope",
    "parse_polytope",
    "enumerate_vertices",
    "relint_contains",
    "affine_projection",
    "bounding_box",
]


@dataclass(frozen=True)
class HalfSpace:
    """The set {x : normal . x <= offset}, normal primitive integer."""

    normal: tuple
    offset: object

    @staticmethod
    def make(normal, offset) -> "HalfSpace":
        normal = vec(normal)
        if all(a == 0 for a in normal):
            raise InputError("half-space normal must be nonzero")
        prim = primitive(normal)
        # offset scales by the same positive factor as the normal
        scale = next(p / a for p, a in zip(prim, normal) if a != 0)
        return HalfSpace(prim, rat(offset) * scale)

    def value(self, x):
        """normal . x - offset; <= 0 means membership."""
        return sum(a * b for a, b in zip(self.normal, x, strict=True)) - self.offset

    def contains(self, x) -> bool:
        return self.value(x) <= 0

    def flipped(self) -> "HalfSpace":
        return HalfSpace(tuple(-a for a in self.normal), -self.offset)

    def key(self):
        return (self.normal, self.offset)

    def to_doc(self) -> dict:
        return {"a": [int(a) for a in self.normal], "b": rat_str(self.offset)}

    @staticmethod
    def from_doc(doc) -> "HalfSpace":
        return HalfSpace.make([rat(a) for a in doc["a"]], rat(doc["b"]))

    def __str__(self):
        terms = " + ".join(f"{int(a)}*x{i}" for i, a in enumerate(self.normal) if a != 0)
        return f"{terms} <= {rat_str(self.offset)}"


@dataclass(frozen=True)
class Box:
    """Axis-aligned box with nonempty interior."""

    lower: tuple
    upper: tuple

    @staticmethod
    def make(lower, upper) -> "Box":
        lower, upper = vec(lower), vec(upper)
        if len(lower) != len(upper):
            raise InputError("box bounds disagree in length")
        if any(l >= u for l, u in zip(lower, upper)):
            raise InputError("box must have nonempty interior")
        return Box(lower, upper)

    @property
    def dim(self) -> int:
        return len(self.lower)

    def halfspaces(self) -> list:
        hs = []
        n = self.dim
        for i in range(n):
            e = tuple(1 if j == i else 0 for j in range(n))
            ne = tuple(-1 if j == i else 0 for j in range(n))
            hs.append(HalfSpace(ne, -self.lower[i]))
            hs.append(HalfSpace(e, self.upper[i]))
        return hs

    def contains(self, x) -> bool:
        return all(l <= v <= u for l, v, u in zip(self.lower, x, self.upper, strict=True))

    def volume(self):
        v = mpq(1)
        for l, u in zip(self.lower, self.upper):
            v *= u - l
        return v


@dataclass(frozen=True)
class Face:
    """A face keyed by its active facet-index set (sorted tuple)."""

    active: tuple
    dim: int
    vertex_ids: tuple
    witness: tuple


class SimplePolytope:
    """Bounded, full-dimensional, simple, irredundant half-space intersection."""

    def __init__(self, dim, halfspaces, vertices, active_sets, faces):
        self.dim = dim
        self.halfspaces = tuple(halfspaces)
        self.vertices = tuple(vertices)          # vertex points
        self.active_sets = tuple(active_sets)    # full tight set per vertex
        self.faces = tuple(faces)                # lattice order: dim descending
        self._face_by_active = {f.active: f for f in self.faces}

    @classmethod
    def from_halfspaces(cls, dim, halfspaces) -> "SimplePolytope":
        hs = []
        seen = {}
        for idx, h in enumerate(halfspaces):
            if not isinstance(h, HalfSpace):
                h = HalfSpace.make(*h)
            if len(h.normal) != dim:
                raise InputError(f"half-space #{idx} has wrong dimension")
            if h.key() in seen:
                raise RedundantHalfSpace(idx)
            seen[h.key()] = idx
            hs.append(h)
        if len(hs) < dim + 1:
            raise Unbounded()
        _check_bounded(dim, hs)
        verts, tights = _collect_vertices(dim, hs)
        if not verts:
            raise NotFullDimensional("empty intersection")
        if linalg.rank([vsub(v, verts[0]) for v in verts[1:]]) < dim:
            raise NotFullDimensional("vertex set spans a proper affine subspace")
        for j, h in enumerate(hs):
            on = [verts[i] for i in range(len(verts)) if j in tights[i]]
            if not on or (len(on) > 1 and linalg.rank([vsub(v, on[0]) for v in on[1:]]) < dim - 1) or len(on) == 1 and dim > 1:
                raise RedundantHalfSpace(j)
        for v, t in zip(verts, tights):
            if len(t) != dim:
                raise NotSimple(v, t)
        faces = _enumerate_faces(dim, verts, tights)
        return cls(dim, hs, verts, [tuple(sorted(t)) for t in tights], faces)

    # -- lookups ---------------------------------------------------------

    def face(self, active) -> Face:
        return self._face_by_active[tuple(sorted(active))]

    @property
    def full_face(self) -> Face:
        return self._face_by_active[()]

    def faces_of_dim(self, d):
        return [f for f in self.faces if f.dim == d]

    def vertex_faces(self):
        return self.faces_of_dim(0)

    def contains(self, x) -> bool:
        return all(h.contains(x) for h in self.halfspaces)

    def on_facet_span(self, x) -> bool:
        """True when x lies on the affine span of some facet."""
        return any(h.value(x) == 0 for h in self.halfspaces)

    # -- documents -------------------------------------------------------

    def to_doc(self) -> dict:
        return {"dim": self.dim, "halfspaces": [h.to_doc() for h in self.halfspaces]}

    def to_json(self) -> str:
        return json.dumps(self.to_doc(), indent=2) + "\n"


def parse_polytope(doc) -> SimplePolytope:
    """Build a validated SimplePolytope from a document (dict or JSON text)."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as e:
            raise InputError(f"bad JSON: {e}") from None
    if not isinstance(doc, dict) or "dim" not in doc or "halfspaces" not in doc:
        raise InputError("document must carry 'dim' and 'halfspaces'")
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise InputError(f"bad dimension {dim!r}")
    hs = []
    for rec in doc["halfspaces"]:
        if not isinstance(rec, dict) or "a" not in rec or "b" not in rec:
            raise InputError(f"bad half-space record {rec!r}")
        hs.append(HalfSpace.from_doc(rec))
    return SimplePolytope.from_halfspaces(dim, hs)


def _check_bounded(dim, hs):
    """Recession cone {d : A d <= 0} must be {0}; otherwise Unbounded."""
    rows = [h.normal for h in hs]
    if linalg.rank(rows) < dim:
        d = linalg.nullspace(rows, dim)[0]
        raise Unbounded(vec_str(d))
    zeros = [ZERO] * len(rows)
    for i in range(dim):
        for sgn in (1, -1):
            cap = tuple(sgn if j == i else 0 for j in range(dim))
            res = lp.solve_lp_max(cap, list(rows) + [cap], zeros + [mpq(1)])
            if res.status != lp.OPTIMAL or res.value > 0:
                raise Unbounded(vec_str(res.x) if res.x else None)


def _collect_vertices(dim, hs):
    """Solve all n-subsets; keep feasible solutions with their full tight sets."""
    found = {}
    for subset in combinations(range(len(hs)), dim):
        rows = [hs[i].normal for i in subset]
        rhs = [hs[i].offset for i in subset]
        x = linalg.solve(rows, rhs)
        if x is None or x in found:
            continue
        vals = [h.value(x) for h in hs]
        if any(v > 0 for v in vals):
            continue
        found[x] = frozenset(i for i, v in enumerate(vals) if v == 0)
    verts = sorted(found)
    return verts, [found[v] for v in verts]


def enumerate_vertices(halfspaces, dim):
    """All vertices of the intersection with their active sets.

    Raises NotSimple as soon as some vertex is over-tight.
    """
    hs = [h if isinstance(h, HalfSpace) else HalfSpace.make(*h) for h in halfspaces]
    verts, tights = _collect_vertices(dim, hs)
    for v, t in zip(verts, tights):
        if len(t) > dim:
            raise NotSimple(v, t)
    return [(v, tuple(sorted(t))) for v, t in zip(verts, tights)]


def _enumerate_faces(dim, verts, tights):
    """Faces = distinct subsets of vertex active sets (simplicity)."""
    members = {}
    for vid, t in enumerate(tights):
        t = tuple(sorted(t))
        for k in range(len(t) + 1):
            for sub in combinations(t, k):
                members.setdefault(sub, []).append(vid)
    faces = []
    for active in sorted(members, key=lambda a: (len(a), a)):
        vids = tuple(members[active])
        k = len(vids)
        witness = tuple(sum(verts[i][c] for i in vids) / k for c in range(dim))
        faces.append(Face(active, dim - len(active), vids, witness))
    return faces


def enumerate_faces(P: SimplePolytope) -> tuple:
    """The face lattice, ordered by reverse inclusion of active sets
    (the full face first, vertices last)."""
    return P.faces


def relint_contains(P: SimplePolytope, F: Face, x) -> bool:
    """Exact relative-interior membership test."""
    active = set(F.active)
    for i, h in enumerate(P.halfspaces):
        v = h.value(x)
        if i in active:
            if v != 0:
                return False
        elif v >= 0:
            return False
    return True


def affine_projection(P: SimplePolytope, F: Face, c) -> tuple:
    """Orthogonal projection of c onto the affine hull of F.

    The hull is {x : a_i . x = b_i, i active}; the active normals are
    independent by simplicity, so proj = c - A^T (A A^T)^-1 (A c - b).
    """
    if not F.active:
        return vec(c)
    c = vec(c)
    A = [P.halfspaces[i].normal for i in F.active]
    b = [P.halfspaces[i].offset for i in F.active]
    gram = [[dot(r, s) for s in A] for r in A]
    resid = [dot(r, c) - bi for r, bi in zip(A, b)]
    mult = linalg.solve(gram, resid)
    return tuple(ci - sum(mult[k] * A[k][j] for k in range(len(A))) for j, ci in enumerate(c))


def bounding_box(P: SimplePolytope, inflate=1) -> Box:
    """Coordinate-wise vertex bounds, each side scaled about its center."""
    inflate = rat(inflate)
    if inflate < 1:
        raise InputError("inflate must be >= 1")
    lower, upper = [], []
    for c in range(P.dim):
        vals = [v[c] for v in P.vertices]
        lo, hi = min(vals), max(vals)
        mid = (lo + hi) / 2
        half = (hi - lo) / 2 * inflate
        lower.append(mid - half)
        upper.append(mid + half)
    return Box.make(lower, upper)
