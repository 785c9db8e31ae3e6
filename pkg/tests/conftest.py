"""Shared fixtures: the named polytopes, seeded derived shapes, and the
helpers (generic polarizing vectors, independent membership oracles) the
suites lean on."""

import pytest
from gmpy2 import mpq

import polydecomp as pd
from polydecomp.measure import SeededStream


@pytest.fixture(scope="session")
def interval():
    return pd.shapes.interval(-1, 1)


@pytest.fixture(scope="session")
def square():
    return pd.shapes.cube(2)


@pytest.fixture(scope="session")
def triangle():
    return pd.shapes.simplex(2)


@pytest.fixture(scope="session")
def simplex3():
    return pd.shapes.simplex(3)


@pytest.fixture(scope="session")
def cube3():
    return pd.shapes.cube(3)


@pytest.fixture(scope="session")
def cube4():
    return pd.shapes.cube(4)


def seeded_random_fixtures(seed=7):
    """Three deterministic 'random' simple 2-/3-polytopes: vertex
    truncations of simplices and a prism over one of them."""
    rng = SeededStream(seed)

    def depth():
        return mpq((rng.next_u64() % 200) + 28, 512)  # within (0, 1/2)

    tri = pd.shapes.simplex(2)
    trunc_tri = pd.shapes.truncate_vertex(tri, rng.next_u64() % 3, depth())
    prism = pd.shapes.product(trunc_tri, pd.shapes.interval(0, 1))
    t3 = pd.shapes.simplex(3)
    trunc_t3 = pd.shapes.truncate_vertex(t3, rng.next_u64() % 4, depth())
    return [trunc_tri, prism, trunc_t3]


@pytest.fixture(scope="session")
def random_fixtures():
    return seeded_random_fixtures()


@pytest.fixture(scope="session")
def all_fixtures(interval, triangle, square, simplex3, cube4, random_fixtures):
    return [interval, triangle, square, simplex3, cube4] + random_fixtures


def generic_etas(P, count=2):
    """Deterministic polarizing vectors with no zero edge pairings."""
    frames = [pd.edge_frame(P, F.vertex_ids[0]) for F in P.vertex_faces()]
    out = []
    base = 2
    while len(out) < count:
        eta = tuple(mpq(base) ** k for k in range(P.dim))
        if all(pd.rationals.dot(eta, g) != 0 for fr in frames for g in fr.generators):
            out.append(eta)
            negated = tuple(-e for e in eta)
            if len(out) < count and all(
                    pd.rationals.dot(negated, g) != 0 for fr in frames for g in fr.generators):
                out.append(negated)
        base += 1
    return out[:count]


def definition_cone_member(P, F, x, basepoint=None):
    """Membership in the swept-ray cone at F, decided by exact interval
    arithmetic along the segment from a relative-interior basepoint.

    x belongs iff x equals the basepoint or some t > 0 keeps
    basepoint + t (x - basepoint) inside the polytope.
    """
    w = basepoint if basepoint is not None else F.witness
    if tuple(x) == tuple(w):
        return True
    hi = None  # None = unbounded above
    for h in P.halfspaces:
        vw = h.value(w)
        kappa = h.value(x) - vw
        if kappa > 0:
            bound = -vw / kappa
            if hi is None or bound < hi:
                hi = bound
    return hi is None or hi > 0


def relint_basepoints(P, F, count=3):
    """A few distinct relative-interior points of F (witness plus convex
    mixes of the witness with the face's vertices)."""
    points = [F.witness]
    for k, vid in enumerate(F.vertex_ids[:count - 1]):
        t = mpq(1, 3 + k)
        v = P.vertices[vid]
        points.append(tuple((1 - t) * a + t * b for a, b in zip(F.witness, v)))
    return points
