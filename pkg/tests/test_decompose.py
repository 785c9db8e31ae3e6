import json

import pytest
from gmpy2 import mpq

import polydecomp as pd
from polydecomp.errors import AssumptionViolated, DegeneratePairing, GenericityFailure
from polydecomp.measure import SeededStream

from conftest import definition_cone_member, generic_etas, relint_basepoints


def cell_by_active(D, active):
    return next(c for c in D.cells if c.provenance[1] == tuple(active))


def hs_set(cell):
    return {(h.normal, h.offset) for h in cell.halfspaces}


# -- tangent cones ----------------------------------------------------------

def test_tangent_cone_full_face_is_everything(square):
    cone = pd.tangent_cone(square, square.full_face)
    assert cone.halfspaces == ()


def test_tangent_cone_at_square_corner(square):
    cone = pd.tangent_cone(square, square.face([0, 2]))
    assert {(h.normal, h.offset) for h in cone.halfspaces} == {((-1, 0), 0), ((0, -1), 0)}


def test_tangent_cone_at_triangle_edges(triangle):
    for F in triangle.faces_of_dim(1):
        cone = pd.tangent_cone(triangle, F)
        assert len(cone.halfspaces) == 1
        assert cone.halfspaces[0] is triangle.halfspaces[F.active[0]]


def test_tangent_cone_matches_swept_ray_definition(all_fixtures):
    # H-form membership versus the ray-sweep decision from several
    # relative-interior basepoints, on seeded points around the polytope.
    for P in all_fixtures:
        region = pd.bounding_box(P, 2)
        rng = SeededStream(11)
        pts = [rng.next_point(region) for _ in range(50)]
        for F in P.faces:
            cone = pd.tangent_cone(P, F)
            for x in pts:
                via_h = cone.contains(x)
                for w in relint_basepoints(P, F):
                    assert definition_cone_member(P, F, x, w) == via_h


# -- edge frames ------------------------------------------------------------

def test_edge_frame_square_corners(square):
    at_origin = pd.edge_frame(square, square.face([0, 2]).vertex_ids[0])
    assert set(at_origin.generators) == {(1, 0), (0, 1)}
    far = square.face([1, 3]).vertex_ids[0]
    assert set(pd.edge_frame(square, far).generators) == {(-1, 0), (0, -1)}


def test_edge_frame_simplex_vertex(triangle):
    vid = next(i for i, v in enumerate(triangle.vertices) if v == (1, 0))
    frame = pd.edge_frame(triangle, vid)
    # dropping -y <= 0 must follow the hypotenuse, dropping x + y <= 1 the axis
    assert set(frame.generators) == {(-1, 1), (-1, 0)}


def test_edge_frame_generators_reach_other_vertices(all_fixtures):
    # each generator's ray from the vertex exits the polytope exactly at a
    # neighbour vertex (exact first-boundary-hit computation)
    for P in all_fixtures:
        vertex_set = set(P.vertices)
        for F in P.vertex_faces():
            vid = F.vertex_ids[0]
            v = P.vertices[vid]
            active = set(F.active)
            for g in pd.edge_frame(P, vid).generators:
                exit_t = None
                for j, h in enumerate(P.halfspaces):
                    slope = pd.rationals.dot(h.normal, g)
                    if j not in active and slope > 0:
                        t = -h.value(v) / slope
                        if exit_t is None or t < exit_t:
                            exit_t = t
                assert exit_t is not None and exit_t > 0
                endpoint = tuple(a + exit_t * b for a, b in zip(v, g))
                assert endpoint in vertex_set, (v, g, endpoint)


# -- polarized vertex cones (lv) --------------------------------------------

def test_lv_square_hand_signs(square):
    D = pd.lawrence_varchenko(square, (1, 2))
    by_vertex = {square.vertices[square.face(c.provenance[1]).vertex_ids[0]]:
                 (c.sign, c.flip_count) for c in D.cells}
    assert by_vertex == {
        (0, 0): (1, 0), (1, 0): (-1, 1), (0, 1): (-1, 1), (1, 1): (1, 2)}


def test_lv_interval_matches_ray_picture(interval):
    D = pd.lawrence_varchenko(interval, (1,))
    low = cell_by_active(D, [0])
    high = cell_by_active(D, [1])
    assert low.sign == 1 and hs_set(low) == {((-1,), 1)}    # [-1, oo)
    assert high.sign == -1 and hs_set(high) == {((-1,), -1)}  # [1, oo)


def test_lv_genericity_failure(square):
    with pytest.raises(GenericityFailure):
        pd.lawrence_varchenko(square, (1, 0))


def test_lv_flip_complement(all_fixtures):
    for P in all_fixtures:
        for eta in generic_etas(P, 2):
            neg = tuple(-e for e in eta)
            masks = {}
            for which, e in (("pos", eta), ("neg", neg)):
                for F in P.vertex_faces():
                    frame = pd.edge_frame(P, F.vertex_ids[0])
                    masks[(which, F.active)] = tuple(
                        pd.rationals.dot(e, g) < 0 for g in frame.generators)
            Dp = pd.lawrence_varchenko(P, eta)
            Dn = pd.lawrence_varchenko(P, neg)
            for cp, cn in zip(Dp.cells, Dn.cells):
                assert cp.provenance == cn.provenance
                mp = masks[("pos", cp.provenance[1])]
                mn = masks[("neg", cn.provenance[1])]
                assert all(a != b for a, b in zip(mp, mn))
                assert cp.flip_count + cn.flip_count == P.dim
                assert cp.flip_count == sum(mp) and cn.flip_count == sum(mn)


def test_lv_positively_paired_vertex_keeps_tangent_cone(square):
    # eta pairing positively with every generator at the origin corner
    D = pd.lawrence_varchenko(square, (1, 2))
    origin_face = next(F for F in square.vertex_faces()
                       if square.vertices[F.vertex_ids[0]] == (0, 0))
    cell = cell_by_active(D, origin_face.active)
    cone = pd.tangent_cone(square, origin_face)
    assert cell.flip_count == 0
    assert hs_set(cell) == {(h.normal, h.offset) for h in cone.halfspaces}


def test_lv_cell_hrep_matches_frame_oracle(square):
    # independent membership route: solve the flipped frame for the
    # barycentric coordinates and require them nonnegative
    eta = (1, 2)
    D = pd.lawrence_varchenko(square, eta)
    rng = SeededStream(5)
    region = pd.bounding_box(square, 2)
    pts = [rng.next_point(region) for _ in range(60)]
    for F in square.vertex_faces():
        vid = F.vertex_ids[0]
        v = square.vertices[vid]
        frame = pd.edge_frame(square, vid)
        flipped = [tuple(-a for a in g) if pd.rationals.dot(eta, g) < 0 else g
                   for g in frame.generators]
        cell = cell_by_active(D, F.active)
        for x in pts:
            coords = pd.linalg.solve(
                [[g[r] for g in flipped] for r in range(2)],
                [xi - vi for xi, vi in zip(x, v)])
            assert (all(t >= 0 for t in coords)) == cell.contains(x)


# -- tangent cone sum (bg) ---------------------------------------------------

def test_bg_triangle_seven_cells(triangle):
    D = pd.brianchon_gram(triangle)
    assert len(D.cells) == 7
    signs = sorted(c.sign for c in D.cells)
    assert signs == [-1, -1, -1, 1, 1, 1, 1]
    for c in D.cells:
        F = triangle.face(c.provenance[1])
        assert c.sign == (-1) ** F.dim and c.flip_count == F.dim


def test_bg_interval_cells(interval):
    D = pd.brianchon_gram(interval)
    assert hs_set(cell_by_active(D, [0])) == {((-1,), 1)}
    assert hs_set(cell_by_active(D, [1])) == {((1,), 1)}
    full = cell_by_active(D, [])
    assert full.sign == -1 and full.halfspaces == ()


def test_bg_cube3_sign_pattern(cube3):
    D = pd.brianchon_gram(cube3)
    tally = {}
    for c in D.cells:
        tally[c.sign] = tally.get(c.sign, 0) + 1
    assert len(D.cells) == 27
    by_dim = {d: len(cube3.faces_of_dim(d)) for d in range(4)}
    assert by_dim == {0: 8, 1: 12, 2: 6, 3: 1}
    assert tally == {1: 8 + 6, -1: 12 + 1}


def test_indicator_examples(triangle, interval, square):
    assert pd.indicator_sum(pd.brianchon_gram(triangle), (mpq(1, 4), mpq(1, 4))) == 1
    assert pd.indicator_sum(pd.brianchon_gram(interval), (1,)) == 1
    assert pd.indicator_sum(pd.brianchon_gram(square), (2, 2)) == 0


# -- norm-square cells (witten) ----------------------------------------------

def test_witten_interval_cells(interval):
    D = pd.witten(interval, (0,))
    low = cell_by_active(D, [0])
    high = cell_by_active(D, [1])
    full = cell_by_active(D, [])
    assert low.sign == -1 and hs_set(low) == {((1,), -1)}     # (-oo, -1]
    assert high.sign == -1 and hs_set(high) == {((-1,), -1)}  # [1, oo)
    assert full.sign == 1 and full.halfspaces == ()


WITTEN_SQUARE_EXPECTED = {
    (): (1, frozenset()),
    (0,): (-1, frozenset({((1, 0), 0)})),
    (1,): (-1, frozenset({((-1, 0), -1)})),
    (2,): (-1, frozenset({((0, 1), 0)})),
    (3,): (-1, frozenset({((0, -1), -1)})),
    (0, 2): (1, frozenset({((1, 0), 0), ((0, 1), 0)})),
    (0, 3): (1, frozenset({((1, 0), 0), ((0, -1), -1)})),
    (1, 2): (1, frozenset({((-1, 0), -1), ((0, 1), 0)})),
    (1, 3): (1, frozenset({((-1, 0), -1), ((0, -1), -1)})),
}


def test_witten_square_hand_fixture(square):
    D = pd.witten(square, (mpq(1, 2), mpq(1, 2)))
    assert len(D.cells) == 9
    got = {c.provenance[1]: (c.sign, frozenset(hs_set(c))) for c in D.cells}
    assert got == WITTEN_SQUARE_EXPECTED


def test_witten_assumption_violated(triangle):
    with pytest.raises(AssumptionViolated) as exc:
        pd.witten(triangle, (2, 2))
    assert set(exc.value.faces) == {(), (0,), (1,)}


def test_witten_central_symmetry_flip_counts(square, cube3):
    for P, c in ((square, (mpq(1, 2), mpq(1, 2))),
                 (cube3, (mpq(1, 2), mpq(1, 2), mpq(1, 2)))):
        D = pd.witten(P, c)
        for cell in D.cells:
            F = P.face(cell.provenance[1])
            assert cell.flip_count == P.dim - F.dim
            # reflection through the face's hull: every active constraint flips
            expected = {(tuple(-a for a in P.halfspaces[i].normal), -P.halfspaces[i].offset)
                        for i in F.active}
            assert hs_set(cell) == expected


def test_witten_degenerate_pairing(square):
    # center on the affine span of an edge: the full-face projection is the
    # center itself, fine, but the edge x = 0 sees a zero transverse pairing
    with pytest.raises((DegeneratePairing, AssumptionViolated)):
        pd.witten(square, (0, mpq(1, 2)))


def test_witten_independent_of_vertex_choice(all_fixtures):
    # flip decisions must not depend on which vertex frame represents the
    # transverse directions; recompute with every vertex of each face
    for P in all_fixtures[:4]:
        found = pd.admissible_center(P)
        if found is None:
            continue
        c, _ = found
        D = pd.witten(P, c)
        for cell in D.cells:
            F = P.face(cell.provenance[1])
            if not F.active:
                continue
            xF = pd.affine_projection(P, F, c)
            vF = tuple(2 * (a - b) for a, b in zip(xF, c))
            for vid in F.vertex_ids:
                frame = pd.edge_frame(P, vid)
                by_drop = dict(zip(frame.active, frame.generators))
                flips = sum(1 for j in F.active
                            if pd.rationals.dot(vF, by_drop[j]) < 0)
                assert flips == cell.flip_count


# -- invariants across kinds --------------------------------------------------

def test_sign_flip_invariant_everywhere(all_fixtures):
    for P in all_fixtures:
        decos = [pd.brianchon_gram(P)]
        decos += [pd.lawrence_varchenko(P, e) for e in generic_etas(P, 1)]
        found = pd.admissible_center(P)
        if found:
            decos.append(pd.witten(P, found[0]))
        for D in decos:
            for c in D.cells:
                assert c.sign == (-1) ** c.flip_count


def test_cell_counts(all_fixtures):
    for P in all_fixtures:
        assert len(pd.brianchon_gram(P).cells) == len(P.faces)
        eta = generic_etas(P, 1)[0]
        assert len(pd.lawrence_varchenko(P, eta).cells) == len(P.vertex_faces())


def test_determinism_and_round_trip(square):
    for D in (pd.brianchon_gram(square),
              pd.lawrence_varchenko(square, (1, 2)),
              pd.witten(square, (mpq(1, 2), mpq(1, 2)))):
        doc = pd.decomposition_to_doc(D)
        text1 = json.dumps(doc, indent=2)
        text2 = json.dumps(pd.decomposition_to_doc(D), indent=2)
        assert text1 == text2
        back = pd.decomposition_from_doc(json.loads(text1), square)
        assert pd.decomposition_to_doc(back) == doc
        assert back.cells == D.cells
