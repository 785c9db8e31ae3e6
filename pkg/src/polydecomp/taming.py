"""Critical-point machinery on the polytope for three height recipes.

A recipe ("taming spec") is a linear functional, the squared distance to a
center, or its negative. Each induces per-face critical data: for the
linear recipe only faces whose direction space is orthogonal to the
functional carry critical points (vertices always; higher faces then have
a whole critical face and are flagged non-isolated); for the squared
distance both signs localize at the orthogonal projection of the center
onto each face's affine hull.

A center is admissible when every face's projection lands in that face's
relative interior. `admissible_center` searches for one by exact LP:
because the projection onto a fixed affine hull is an affine map of the
center, "strictly inside by margin t" is linear in (c, t), and we maximize
t with Bland-rule simplex over the doubled bounding box.
"""

from dataclasses import dataclass

from gmpy2 import mpq

from . import linalg, lp
from .decompose import (
    Decomposition,
    brianchon_gram,
    lawrence_varchenko,
    witten,
)
from .errors import InputError
from .polytope import (
    Face,
    SimplePolytope,
    affine_projection,
    bounding_box,
    relint_contains,
)
from .rationals import dot, norm1, norm2sq, primitive, rat_str, vec, vec_str, vsub

__all__ = [
    "TamingSpec",
    "LocalizingComponent",
    "localizing_set",
    "FaceAssumption",
    "check_assumption",
    "admissible_center",
    "dual_edge_frame",
    "MorseData",
    "morse_data",
    "morse_data_from_center",
    "verify_morse_data",
    "induced_decomposition",
]

LINEAR = "linear"
NORMSQ = "normsq"
NEGNORMSQ = "negnormsq"


@dataclass(frozen=True)
class TamingSpec:
    kind: str
    vector: tuple  # eta for linear, center otherwise

    @staticmethod
    def linear(eta) -> "TamingSpec":
        eta = vec(eta)
        if all(a == 0 for a in eta):
            raise InputError("linear taming needs a nonzero vector")
        return TamingSpec(LINEAR, eta)

    @staticmethod
    def norm_square(center) -> "TamingSpec":
        return TamingSpec(NORMSQ, vec(center))

    @staticmethod
    def neg_norm_square(center) -> "TamingSpec":
        return TamingSpec(NEGNORMSQ, vec(center))


@dataclass(frozen=True)
class LocalizingComponent:
    face_active: tuple
    critical_point: tuple
    critical_value: object
    in_relint: bool
    isolated: bool  # False flags a whole critical face (genericity warning)

    def to_doc(self) -> dict:
        return {
            "face": list(self.face_active),
            "critical_point": vec_str(self.critical_point),
            "critical_value": rat_str(self.critical_value),
            "in_relint": self.in_relint,
            "isolated": self.isolated,
        }


def _direction_space_orthogonal(P, F, eta) -> bool:
    """eta vanishes on F's direction space iff it lies in the active row span."""
    if F.dim == 0:
        return True
    rows = [P.halfspaces[i].normal for i in F.active]
    return linalg.rank(rows + [eta]) == len(rows)


def localizing_set(P: SimplePolytope, spec: TamingSpec) -> list:
    """Per-face critical components of the recipe's height function."""
    out = []
    if spec.kind == LINEAR:
        eta = spec.vector
        for F in P.faces:
            if not _direction_space_orthogonal(P, F, eta):
                continue
            point = F.witness
            out.append(LocalizingComponent(
                F.active, point, dot(eta, point),
                in_relint=True, isolated=(F.dim == 0)))
    elif spec.kind in (NORMSQ, NEGNORMSQ):
        c = spec.vector
        for F in P.faces:
            xF = affine_projection(P, F, c)
            out.append(LocalizingComponent(
                F.active, xF, norm2sq(vsub(xF, c)),
                in_relint=relint_contains(P, F, xF), isolated=True))
    else:
        raise InputError(f"unknown taming kind {spec.kind!r}")
    out.sort(key=lambda comp: (-len(comp.face_active), comp.face_active))
    return out


@dataclass(frozen=True)
class FaceAssumption:
    face_active: tuple
    passed: bool
    projection: tuple

    def to_doc(self) -> dict:
        return {"face": list(self.face_active), "pass": self.passed,
                "projection": vec_str(self.projection)}


def check_assumption(P: SimplePolytope, center) -> list:
    """Per-face report: does the nearest point to the center stay interior?"""
    center = vec(center)
    out = []
    for F in P.faces:
        xF = affine_projection(P, F, center)
        out.append(FaceAssumption(F.active, relint_contains(P, F, xF), xF))
    return out


def _projection_map(P, F):
    """The affine map c -> proj_F(c) as (matrix M, shift w)."""
    n = P.dim
    if not F.active:
        ident = [tuple(mpq(1) if j == i else mpq(0) for j in range(n)) for i in range(n)]
        return ident, tuple(mpq(0) for _ in range(n))
    A = [P.halfspaces[i].normal for i in F.active]
    b = [P.halfspaces[i].offset for i in F.active]
    gram = [[dot(r, s) for s in A] for r in A]
    ginv = linalg.invert(gram)
    k = len(A)
    # M = I - A^T Ginv A ; w = A^T Ginv b
    AtG = [[sum(mpq(A[t][i]) * ginv[t][s] for t in range(k)) for s in range(k)]
           for i in range(n)]
    M = []
    for i in range(n):
        row = [-sum(AtG[i][s] * A[s][j] for s in range(k)) for j in range(n)]
        row[i] += 1
        M.append(tuple(row))
    w = tuple(sum(AtG[i][s] * b[s] for s in range(k)) for i in range(n))
    return M, w


def admissible_center(P: SimplePolytope):
    """Search the doubled bounding box for a center whose every face
    projection is strictly interior; exact LP, margin-maximizing.

    Returns (center, margin) with margin > 0, or None when no admissible
    center exists inside the search box (which is not a proof that none
    exists elsewhere).
    """
    n = P.dim
    rows, rhs = [], []
    seen = set()

    def add(row, b):
        key = primitive(row) + (mpq(b) / next(abs(x) for x in row if x != 0),)
        # scale-insensitive dedup: normalize by the first nonzero magnitude
        if key in seen:
            return
        seen.add(key)
        rows.append(row)
        rhs.append(b)

    for F in P.faces:
        if F.dim == 0:
            continue
        M, w = _projection_map(P, F)
        active = set(F.active)
        for j, h in enumerate(P.halfspaces):
            if j in active:
                continue
            coeff = tuple(sum(mpq(h.normal[i]) * M[i][col] for i in range(n))
                          for col in range(n))
            row = coeff + (mpq(norm1(h.normal)),)
            add(row, h.offset - dot(h.normal, w))
    box = bounding_box(P, 2)
    for i in range(n):
        e = [mpq(0)] * (n + 1)
        e[i] = mpq(1)
        add(tuple(e), box.upper[i])
        e[i] = mpq(-1)
        add(tuple(e), -box.lower[i])

    objective = [mpq(0)] * n + [mpq(1)]
    res = lp.solve_lp_max(objective, rows, rhs)
    if res.status != lp.OPTIMAL or res.value <= 0:
        return None
    return res.x[:n], res.value


def dual_edge_frame(P: SimplePolytope, F: Face) -> list:
    """One primitive vector per active index j: orthogonal to the other
    active normals, negative against its own, chosen in the active span."""
    if not F.active:
        raise InputError("the full face has no active constraints")
    A = [P.halfspaces[i].normal for i in F.active]
    gram = [[dot(r, s) for s in A] for r in A]
    ginv = linalg.invert(gram)
    k = len(A)
    out = []
    for pos in range(k):
        coeffs = [-ginv[pos][s] for s in range(k)]
        xi = tuple(sum(coeffs[s] * A[s][j] for s in range(k)) for j in range(P.dim))
        out.append(primitive(xi))
    return out


@dataclass
class MorseData:
    """Per-face (point, level) data: points relatively interior, levels
    strictly increasing into subfaces."""

    entries: dict  # active tuple -> (point tuple, level mpq)

    def to_doc(self) -> dict:
        return {"faces": [
            {"active": list(a), "x": vec_str(x), "alpha": rat_str(al)}
            for a, (x, al) in sorted(self.entries.items(), key=lambda kv: (len(kv[0]), kv[0]))
        ]}

    @staticmethod
    def from_doc(doc) -> "MorseData":
        from .rationals import rat

        entries = {}
        for rec in doc["faces"]:
            entries[tuple(rec["active"])] = (vec(rec["x"]), rat(rec["alpha"]))
        return MorseData(entries)


def morse_data(P: SimplePolytope) -> MorseData:
    """Default data: face witness and codimension level."""
    return MorseData({F.active: (F.witness, mpq(len(F.active))) for F in P.faces})


def morse_data_from_center(P: SimplePolytope, center) -> MorseData:
    """Projection points with squared-distance levels; strictly increasing
    along subface chains whenever the center is admissible."""
    center = vec(center)
    entries = {}
    for F in P.faces:
        xF = affine_projection(P, F, center)
        entries[F.active] = (xF, norm2sq(vsub(xF, center)))
    return MorseData(entries)


def verify_morse_data(P: SimplePolytope, data: MorseData):
    """Check coverage, relative interiority, and strict chain monotonicity.

    Returns (ok, violations). For squared-distance data the interiority
    check is the whole content: the restriction to each affine hull is
    strictly convex, so the projection is automatically the unique
    critical point there.
    """
    violations = []
    for F in P.faces:
        if F.active not in data.entries:
            violations.append(("missing", F.active))
            continue
        x, _ = data.entries[F.active]
        if not relint_contains(P, F, x):
            violations.append(("not-relint", F.active))
    for F in P.faces:
        if F.active not in data.entries:
            continue
        _, aF = data.entries[F.active]
        for G in P.faces:
            if G.active == F.active or G.active not in data.entries:
                continue
            if set(F.active) < set(G.active):  # G is a proper subface of F
                _, aG = data.entries[G.active]
                if not aF < aG:
                    violations.append(("not-increasing", F.active, G.active))
    return (not violations), violations


def induced_decomposition(P: SimplePolytope, spec: TamingSpec) -> Decomposition:
    """Dispatch: linear -> polarized vertex cones, squared distance ->
    norm-square cells, negated squared distance -> tangent-cone sum
    (center-independent; it is recorded only in the call)."""
    if spec.kind == LINEAR:
        return lawrence_varchenko(P, spec.vector)
    if spec.kind == NORMSQ:
        return witten(P, spec.vector)
    if spec.kind == NEGNORMSQ:
        return brianchon_gram(P)
    raise InputError(f"unknown taming kind {spec.kind!r}")
