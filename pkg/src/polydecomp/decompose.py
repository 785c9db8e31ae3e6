"""Signed cone decompositions of a simple polytope.

Three kinds are built here, all as finite lists of closed polyhedral cells
carrying a sign:

* ``bg``     - one cell per face: the tangent cone, signed by (-1)^dim F.
* ``lv``     - one cell per vertex: the vertex cone with the edge
               generators pairing negatively against a polarizing vector
               flipped, signed by the flip parity.
* ``witten`` - one cell per face: the tangent cone with its transverse
               generators flipped against the gradient direction of the
               squared distance to a center, valid when every face's
               nearest point to the center is relatively interior.

The defining identity (pointwise for bg everywhere, for the others away
from the facet spans; measure-level for all three) is that the signed
indicator sum reproduces the closed polytope's indicator.
"""

from dataclasses import dataclass

from gmpy2 import mpq

from . import linalg
from .errors import AssumptionViolated, DegeneratePairing, GenericityFailure, InputError
from .polytope import Face, HalfSpace, SimplePolytope, affine_projection, relint_contains
from .rationals import dot, primitive, rat_str, vec, vec_str, vsub

__all__ = [
    "TangentCone",
    "EdgeFrame",
    "SignedCell",
    "Decomposition",
    "tangent_cone",
    "edge_frame",
    "brianchon_gram",
    "lawrence_varchenko",
    "witten",
    "indicator_sum",
    "decomposition_to_doc",
    "decomposition_from_doc",
]


@dataclass(frozen=True)
class TangentCone:
    """Cone of directions into the polytope from a face, in H-form.

    The half-space list is the sublist active on the face; empty means all
    of space (the cone at the full face).
    """

    face_active: tuple
    halfspaces: tuple
    apex_witness: tuple

    def contains(self, x) -> bool:
        return all(h.contains(x) for h in self.halfspaces)


@dataclass(frozen=True)
class EdgeFrame:
    """Primitive edge directions at a vertex, one per active constraint.

    generators[k] solves the n-1 equalities left after dropping the k-th
    active constraint and points into the polytope (the dropped constraint
    strictly decreases along it).
    """

    vertex_id: int
    active: tuple
    generators: tuple


@dataclass(frozen=True)
class SignedCell:
    """A closed polyhedral cell with sign, provenance, and flip count."""

    halfspaces: tuple
    sign: int
    provenance: tuple  # ("face" | "vertex", active tuple)
    flip_count: int

    def contains(self, x) -> bool:
        return all(h.contains(x) for h in self.halfspaces)


@dataclass(frozen=True)
class Decomposition:
    polytope: SimplePolytope
    kind: str  # "bg" | "lv" | "witten"
    parameter: tuple | None  # eta for lv, center for witten
    cells: tuple


def tangent_cone(P: SimplePolytope, F: Face) -> TangentCone:
    """Half-spaces active on F; equals the swept-ray cone from any relative
    interior point (a tested equivalence, not an assumption)."""
    return TangentCone(F.active, tuple(P.halfspaces[i] for i in F.active), F.witness)


def edge_frame(P: SimplePolytope, vertex_id: int) -> EdgeFrame:
    active = P.active_sets[vertex_id]
    v = P.vertices[vertex_id]
    gens = []
    for j in active:
        rows = [P.halfspaces[i].normal for i in active if i != j]
        basis = linalg.nullspace(rows, P.dim)
        assert len(basis) == 1, "active normals must be independent"
        g = primitive(basis[0])
        val = dot(P.halfspaces[j].normal, g)
        assert val != 0
        if val > 0:
            g = tuple(-a for a in g)
        gens.append(g)
    return EdgeFrame(vertex_id, active, tuple(gens))


def _cell_sort_key(cell: SignedCell):
    return (-len(cell.provenance[1]), cell.provenance[1])


def brianchon_gram(P: SimplePolytope) -> Decomposition:
    cells = []
    for F in P.faces:
        cone = tangent_cone(P, F)
        cells.append(SignedCell(cone.halfspaces, (-1) ** F.dim, ("face", F.active), F.dim))
    cells.sort(key=_cell_sort_key)
    return Decomposition(P, "bg", None, tuple(cells))


def lawrence_varchenko(P: SimplePolytope, eta) -> Decomposition:
    """Polarized vertex cones: flip edge generators pairing negatively
    with eta; the H-form comes from inverting the flipped frame matrix."""
    eta = vec(eta)
    cells = []
    for F in P.vertex_faces():
        vid = F.vertex_ids[0]
        frame = edge_frame(P, vid)
        v = P.vertices[vid]
        flipped = []
        eps = 0
        for g in frame.generators:
            pairing = dot(eta, g)
            if pairing == 0:
                raise GenericityFailure(vec_str(v), [int(a) for a in g])
            if pairing < 0:
                flipped.append(tuple(-a for a in g))
                eps += 1
            else:
                flipped.append(g)
        cols = linalg.invert([[mpq(g[r]) for g in flipped] for r in range(P.dim)])
        hs = []
        for row in cols:
            normal = tuple(-a for a in row)
            hs.append(HalfSpace.make(normal, dot(normal, v)))
        cells.append(SignedCell(tuple(hs), (-1) ** eps, ("vertex", F.active), eps))
    cells.sort(key=_cell_sort_key)
    return Decomposition(P, "lv", eta, tuple(cells))


def witten(P: SimplePolytope, center) -> Decomposition:
    """Norm-square localization cells.

    Requires an admissible center: each face's nearest point must be
    relatively interior. Each cell keeps the face's affine hull as apex,
    flips the transverse generators (the reduced frame of the face's
    lowest vertex) against twice the outward displacement, and flips the
    corresponding active half-spaces in step.
    """
    center = vec(center)
    failing = []
    projections = {}
    for F in P.faces:
        xF = affine_projection(P, F, center)
        projections[F.active] = xF
        if not relint_contains(P, F, xF):
            failing.append(F.active)
    if failing:
        raise AssumptionViolated(failing)

    cells = []
    for F in P.faces:
        xF = projections[F.active]
        vF = tuple(2 * (a - b) for a, b in zip(xF, center))
        vid = min(F.vertex_ids)
        frame = edge_frame(P, vid)
        gen_by_drop = dict(zip(frame.active, frame.generators))
        hs = []
        flips = 0
        for j in F.active:
            g = gen_by_drop[j]
            pairing = dot(vF, g)
            if pairing == 0:
                raise DegeneratePairing(F.active, [int(a) for a in g])
            h = P.halfspaces[j]
            if pairing < 0:
                hs.append(h.flipped())
                flips += 1
            else:
                hs.append(h)
        cells.append(SignedCell(tuple(hs), (-1) ** flips, ("face", F.active), flips))
    cells.sort(key=_cell_sort_key)
    return Decomposition(P, "witten", center, tuple(cells))


def indicator_sum(D: Decomposition, x) -> int:
    """Signed count of closed cells containing x."""
    x = vec(x)
    return sum(c.sign for c in D.cells if c.contains(x))


# -- serialization ---------------------------------------------------------

def decomposition_to_doc(D: Decomposition) -> dict:
    doc = {"kind": D.kind}
    if D.kind == "lv":
        doc["eta"] = vec_str(D.parameter)
    elif D.kind == "witten":
        doc["center"] = vec_str(D.parameter)
    doc["cells"] = [
        {
            "provenance": {"kind": c.provenance[0], "active": list(c.provenance[1])},
            "sign": c.sign,
            "flip_count": c.flip_count,
            "halfspaces": [h.to_doc() for h in c.halfspaces],
        }
        for c in D.cells
    ]
    return doc


def decomposition_from_doc(doc, P: SimplePolytope) -> Decomposition:
    kind = doc.get("kind")
    if kind not in ("bg", "lv", "witten"):
        raise InputError(f"unknown decomposition kind {kind!r}")
    parameter = None
    if kind == "lv":
        parameter = vec(doc["eta"])
    elif kind == "witten":
        parameter = vec(doc["center"])
    cells = []
    for rec in doc["cells"]:
        prov = (rec["provenance"]["kind"], tuple(rec["provenance"]["active"]))
        sign = rec["sign"]
        flip = rec["flip_count"]
        if sign not in (1, -1) or sign != (-1) ** flip:
            raise InputError(f"cell {prov} breaks the sign/flip invariant")
        hs = tuple(HalfSpace.from_doc(h) for h in rec["halfspaces"])
        cells.append(SignedCell(hs, sign, prov, flip))
    return Decomposition(P, kind, parameter, tuple(cells))
