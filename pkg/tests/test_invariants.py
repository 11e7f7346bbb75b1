from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given, settings

from conftest import c4, cube_q3, cycle, disjoint_c4s, drawings, k4_crossed, plane_from
from oneplane._plane import PlaneBuilder
from oneplane.constructions import gen_cube_g8, gen_k4_extremal, gen_ladder_H, load_fixture
from oneplane.errors import (
    Disconnected,
    HasCrossings,
    MinDegreeTooSmall,
    NotK4Free,
    PreconditionNotK3Free,
    TooFewVertices,
    UnknownFace,
    UnknownVertex,
)
from oneplane.invariants import (
    ALTERNATING4,
    FAKE3,
    TRUE4,
    a_value,
    alternating_vertices,
    check_edge_formula,
    check_incidence_identity,
    class_histogram,
    classify_faces,
    compute_invariants,
    crossing_skeleton,
    eta,
    fake_structure_ok,
    fake_triangle_check,
    low_degree_bound_check,
    plane_edge_count_check,
    sole_exceptional_face,
    two_single_fake_shape,
)


def pendant_star_drawing():
    """u sits where the lines 0-3 and 1-2 meet; vertex 2 hangs into one face."""
    pts = [(-2, 2), (2, 2), (-1, -1), (2, -2), (-2, -2), (0, 0), (3, 0)]
    segs = [(0, 5), (5, 3), (1, 5), (5, 2), (0, 1), (0, 4), (3, 4), (6, 3), (1, 6)]
    return plane_from(pts, segs, labels=["p0", "p1", "p2", "p3", "p4", "u", "p8"])


def _face_containing(d, vertices, degree):
    for f in d.faces:
        if f.degree == degree and set(vertices) <= set(f.vertices):
            return f.id
    raise AssertionError(f"no {degree}-face on {vertices}")


def test_eta_with_pendant_and_cut_point():
    d = pendant_star_drawing()
    u = d.vertex_by_label("u")
    lab = d.vertex_by_label
    f1 = _face_containing(d, [lab("p0"), lab("p2"), lab("p3"), lab("p4")], 6)
    f2 = _face_containing(d, [lab("p1"), lab("p8"), lab("p3")], 4)
    f3 = _face_containing(d, [lab("p0"), lab("p1")], 3)
    f0 = _face_containing(d, [lab("p8"), lab("p4")], 5)
    assert [eta(d, u, f) for f in (f0, f1, f2, f3)] == [0, 2, 1, 1]
    assert sum(eta(d, u, f.id) for f in d.faces) == d.degree(u)


def test_eta_cut_vertex():
    # two triangles sharing vertex 0
    d = plane_from([(0, 0), (-2, 1), (-2, -1), (2, 1), (2, -1)], [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    outer = max(d.faces, key=lambda f: f.degree)
    assert outer.degree == 6
    assert eta(d, 0, outer.id) == 2


def test_eta_c4_and_errors():
    d = c4()
    assert all(eta(d, u, f.id) == 1 for u in range(4) for f in d.faces)
    with pytest.raises(UnknownVertex):
        eta(d, 9, 0)
    with pytest.raises(UnknownFace):
        eta(d, 0, 9)


@pytest.mark.parametrize(
    "build, expect",
    [
        (c4, (0, 8, 0)),
        (k4_crossed, (-2, 4, 0)),
        (gen_cube_g8, (-12, 0, 0)),
    ],
)
def test_invariant_values(build, expect):
    r = compute_invariants(build())
    assert (r.A, r.twoB, r.C) == expect
    assert r.identity_ok is True
    assert r.residual == 0


def test_report_text_keys():
    text = compute_invariants(gen_cube_g8()).to_text()
    assert text == "n=8\nm=24\nx=6\nA=-12\ntwoB=0\nC=0\nidentity_ok=true\nface_hist.3=24\n"


def test_k4_crossed_a_value():
    d = k4_crossed()
    assert a_value(d, d.n) == 0


def test_edge_formula_examples():
    for d, lhs in ((c4(), 16), (k4_crossed(), 24), (gen_cube_g8(), 96)):
        chk = check_edge_formula(d)
        assert chk.holds and chk.residual == 0 and chk.lhs == lhs


def test_edge_formula_refuses():
    with pytest.raises(Disconnected):
        check_edge_formula(disjoint_c4s())
    with pytest.raises(TooFewVertices):
        check_edge_formula(plane_from([(0, 0), (1, 0)], [(0, 1)]))
    assert compute_invariants(disjoint_c4s()).identity_ok is None


def _oracle(d):
    """A, twoB, C from face walks traced by the builder, independent of the dart arrays."""
    walks = PlaneBuilder.from_drawing(d).faces()
    fake = lambda v: v >= d.n  # noqa: E731
    big = [w for w in walks if len(w) >= 4]
    two_b = sum(len(w) - 2 * sum(map(fake, w)) for w in big)
    c = sum(len(w) - 4 for w in big)
    A = 0
    for z in range(d.n, d.n_prime):
        a = sum(w.count(z) for w in big)
        A += a - 2
    return A, two_b, c, Counter(len(w) for w in walks)


@settings(max_examples=80, deadline=None)
@given(drawings())
def test_invariants_match_oracle(d):
    r = compute_invariants(d)
    A, two_b, c, hist = _oracle(d)
    assert (r.A, r.twoB, r.C) == (A, two_b, c)
    assert r.face_degree_histogram == dict(hist)
    assert r.twoB >= 0 and r.C >= 0
    assert all(0 <= a <= 4 for a in r.a_values.values())
    if d.is_connected() and d.n >= 3:
        assert check_edge_formula(d).residual == 0
    assert check_incidence_identity(d)


def test_incidence_identity_examples():
    assert check_incidence_identity(k4_crossed()).sum_a == 0
    g8 = check_incidence_identity(gen_cube_g8())
    assert g8.holds and g8.sum_a == g8.sum_c == 0
    h3 = gen_ladder_H(3)
    chk = check_incidence_identity(h3)
    A, two_b, _, _ = _oracle(h3)
    assert chk.holds and chk.doubled_ab == 2 * A + two_b


def test_plane_edge_count():
    tri = plane_from([(0, 0), (1, 0), (0, 1)], [(0, 1), (1, 2), (2, 0)])
    assert plane_edge_count_check(tri)
    assert plane_edge_count_check(c4())
    q3 = cube_q3()
    assert q3.m == 12 and plane_edge_count_check(q3)
    with pytest.raises(HasCrossings):
        plane_edge_count_check(k4_crossed())
    with pytest.raises(Disconnected):
        plane_edge_count_check(disjoint_c4s())


@pytest.mark.parametrize(
    "build, expect",
    [
        (c4, (0, 4, 0, 4)),
        (cube_q3, (0, 0, 8, 8)),
        (lambda: cycle(6), (4, 6, 0, 6)),
    ],
)
def test_low_degree_bound(build, expect):
    r = low_degree_bound_check(build())
    assert (r.s, r.n2, r.n3, r.bound) == expect
    assert r.holds


def test_low_degree_specialisations():
    r = low_degree_bound_check(cycle(6))
    assert r.two_hexagons == (6, True)
    assert r.one_odd_face is None
    with pytest.raises(MinDegreeTooSmall):
        low_degree_bound_check(plane_from([(0, 0), (1, 0), (2, 0)], [(0, 1), (1, 2)]))


def test_classify_examples():
    hist = Counter(c.kind for c in classify_faces(k4_crossed()).values())
    assert hist == {FAKE3: 4, TRUE4: 1}
    assert class_histogram(gen_cube_g8()) == {FAKE3: 24}


def test_skeleton_g8():
    sk = crossing_skeleton(gen_cube_g8())
    assert (sk.n, sk.m, sk.x) == (8, 12, 6)
    assert (sk.n_prime, sk.m_prime, len(sk.faces)) == (14, 24, 12)
    assert class_histogram(sk) == {ALTERNATING4: 12}
    assert len(sk.components()) == 2
    assert sk.abstract_graph().has_clique(4)
    alt = alternating_vertices(sk)
    assert alt == set(range(8))
    assert all(sk.degree(u) == 3 for u in alt)
    assert sk.abstract_graph().has_clique(3)


def test_skeleton_small():
    sk = crossing_skeleton(k4_crossed())
    assert (sk.n, sk.m, sk.x) == (4, 2, 1)
    sk = crossing_skeleton(c4())
    assert (sk.n, sk.m) == (4, 0)
    assert alternating_vertices(sk) == set()


def test_alternating_empty_cases():
    assert alternating_vertices(gen_cube_g8()) == set()
    assert alternating_vertices(c4()) == set()


def test_fake_triangle_checks():
    with pytest.raises(NotK4Free):
        fake_triangle_check(k4_crossed(), require_k3free=False)
    with pytest.raises(PreconditionNotK3Free):
        fake_triangle_check(k4_crossed(), require_k3free=True)
    assert fake_triangle_check(load_fixture("fig13_nonbip"), require_k3free=True)
    g9 = gen_k4_extremal(9)
    assert g9.m == 24
    assert fake_triangle_check(g9, require_k3free=False)
    r = compute_invariants(g9)
    assert all(a >= 1 for a in r.a_values.values()) and r.A >= -g9.x


@settings(max_examples=60, deadline=None)
@given(drawings())
def test_structural_laws_random(d):
    assert fake_structure_ok(d)
    classes = classify_faces(d)
    for fid, cls in classes.items():
        f = d.face(fid)
        if cls.kind == ALTERNATING4:
            vs = f.vertices
            assert all(vs[i] >= d.n or vs[(i + 1) % 4] >= d.n for i in range(4))
    sk = crossing_skeleton(d)
    for u in alternating_vertices(sk):
        # no alternating vertex of degree at most 2; degree 3 forces a triangle
        assert sk.degree(u) >= 3
        if sk.degree(u) == 3:
            assert sk.abstract_graph().has_clique(3)


def test_skeleton_merges_fake_triangles():
    # G8: each true edge sits between two fake 3-faces, so deleting them all
    # leaves only alternating 4-faces
    d = gen_cube_g8()
    sk = crossing_skeleton(d)
    assert {c.kind for c in classify_faces(sk).values()} == {ALTERNATING4}


def test_shape_predicates():
    sk = crossing_skeleton(gen_cube_g8())
    assert sole_exceptional_face(sk) is None
    assert not two_single_fake_shape(sk)
    d = k4_crossed()
    fid = sole_exceptional_face(d)
    assert fid is not None and d.face(fid).degree == 4

