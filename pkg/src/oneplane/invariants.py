"""Face and incidence invariants of a drawing's planarization.

All quantities are exact integers. The half-integral face sum is kept
doubled (``twoB``), so the edge-count identity is checked in the form
``4m = 12n - 24 - 2A - twoB - 3C``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .drawing import OnePlaneDrawing
from .errors import (
    Disconnected,
    HasCrossings,
    InvariantViolation,
    MinDegreeTooSmall,
    NotK4Free,
    PreconditionNotK3Free,
    TooFewVertices,
)

FAKE3 = "Fake3"
TRUE3 = "True3"
TRUE4 = "True4"
SINGLE_FAKE4 = "SingleFake4"
ALTERNATING4 = "Alternating4"
ALMOST_ALTERNATING5 = "AlmostAlternating5"
OTHER = "Other"


def eta(d: OnePlaneDrawing, u: int, fid: int) -> int:
    """How many times planarization vertex ``u`` occurs on the walk of face ``fid``."""
    d.check_vertex(u)
    return d.face(fid).vertices.count(u)


def fake_count(d: OnePlaneDrawing, fid: int) -> int:
    """Number of fake-vertex occurrences on the walk of face ``fid``."""
    n = d.n
    return sum(1 for v in d.face(fid).vertices if v >= n)


def a_value(d: OnePlaneDrawing, z: int) -> int:
    """Corners of fake vertex ``z`` that lie in faces of degree at least 4."""
    return sum(1 for f in d.faces_at[z] if d.faces[f].degree >= 4)


@dataclass(frozen=True)
class InvariantReport:
    n: int
    m: int
    x: int
    A: int
    twoB: int
    C: int
    a_values: dict[int, int] = field(default_factory=dict)
    c_values: dict[int, int] = field(default_factory=dict)
    face_degree_histogram: dict[int, int] = field(default_factory=dict)
    # None when the identity does not apply (disconnected or n < 3)
    identity_ok: bool | None = None

    @property
    def residual(self) -> int:
        return 4 * self.m - (12 * self.n - 24 - 2 * self.A - self.twoB - 3 * self.C)

    def items(self) -> list[tuple[str, str]]:
        ok = "n/a" if self.identity_ok is None else str(self.identity_ok).lower()
        out = [
            ("n", str(self.n)),
            ("m", str(self.m)),
            ("x", str(self.x)),
            ("A", str(self.A)),
            ("twoB", str(self.twoB)),
            ("C", str(self.C)),
            ("identity_ok", ok),
        ]
        for deg in sorted(self.face_degree_histogram):
            out.append((f"face_hist.{deg}", str(self.face_degree_histogram[deg])))
        return out

    def to_text(self) -> str:
        return "".join(f"{k}={v}\n" for k, v in self.items())


def compute_invariants(d: OnePlaneDrawing) -> InvariantReport:
    faces = d.faces
    c_values = {}
    two_b = c_sum = 0
    for f in faces:
        if f.degree >= 4:
            c = fake_count(d, f.id)
            c_values[f.id] = c
            two_b += f.degree - 2 * c
            c_sum += f.degree - 4
    a_values = {z: a_value(d, z) for z in range(d.n, d.n_prime)}
    A = sum(a - 2 for a in a_values.values())
    hist = dict(sorted(Counter(f.degree for f in faces).items()))
    report = InvariantReport(d.n, d.m, d.x, A, two_b, c_sum, a_values, c_values, hist)
    if d.is_connected() and d.n >= 3:
        object.__setattr__(report, "identity_ok", report.residual == 0)
    return report


@dataclass(frozen=True)
class FormulaCheck:
    holds: bool
    residual: int
    lhs: int
    rhs: int


def _require_connected(d: OnePlaneDrawing, min_n: int = 3) -> None:
    if d.n < min_n:
        raise TooFewVertices(f"need at least {min_n} vertices, got {d.n}")
    if not d.is_connected():
        raise Disconnected(f"graph has {d.connectivity()} components")


def check_edge_formula(d: OnePlaneDrawing) -> FormulaCheck:
    """``4m == 12n - 24 - 2A - twoB - 3C`` for a connected drawing with n >= 3."""
    _require_connected(d)
    r = compute_invariants(d)
    lhs = 4 * r.m
    rhs = 12 * r.n - 24 - 2 * r.A - r.twoB - 3 * r.C
    return FormulaCheck(lhs == rhs, lhs - rhs, lhs, rhs)


@dataclass(frozen=True)
class IncidenceCheck:
    sum_a: int
    sum_c: int
    doubled_ab: int
    big_face_excess: int

    @property
    def holds(self) -> bool:
        return self.sum_a == self.sum_c and self.doubled_ab == self.big_face_excess

    def __bool__(self) -> bool:
        return self.holds


def check_incidence_identity(d: OnePlaneDrawing) -> IncidenceCheck:
    """Fake/big-face incidences counted from both sides, plus the derived
    identity ``2A + twoB == sum(deg F for F of degree >= 4) - 4x``."""
    r = compute_invariants(d)
    big_deg = sum(f.degree for f in d.faces if f.degree >= 4)
    return IncidenceCheck(
        sum(r.a_values.values()),
        sum(r.c_values.values()),
        2 * r.A + r.twoB,
        big_deg - 4 * d.x,
    )


def _require_plane(d: OnePlaneDrawing) -> None:
    if d.x:
        raise HasCrossings(f"drawing has {d.x} crossings")


def plane_edge_count_check(d: OnePlaneDrawing) -> bool:
    """``m == 3n - 6 - sum(deg F - 3 for F of degree >= 4)`` on a connected plane drawing."""
    _require_plane(d)
    _require_connected(d)
    excess = sum(f.degree - 3 for f in d.faces if f.degree >= 4)
    return d.m == 3 * d.n - 6 - excess


@dataclass(frozen=True)
class LowDegreeReport:
    s: int
    n2: int
    n3: int
    bound: int
    holds: bool
    # (k, bound, holds) when every face but one k-face is a 4-face
    one_odd_face: tuple[int, int, bool] | None = None
    # (bound, holds) when every face but exactly two 6-faces is a 4-face
    two_hexagons: tuple[int, bool] | None = None


def _ceil_half(a: int) -> int:
    return -(-a // 2)


def low_degree_bound_check(d: OnePlaneDrawing) -> LowDegreeReport:
    """Degree-2 and degree-3 vertices forced by faces of degree other than 4."""
    _require_plane(d)
    _require_connected(d, min_n=1)
    degs = [d.degree(u) for u in range(d.n)]
    if min(degs) < 2:
        raise MinDegreeTooSmall(f"minimum degree {min(degs)} < 2")
    odd = [f.degree for f in d.faces if f.degree != 4]
    s = sum(deg - 4 for deg in odd)
    n2, n3 = degs.count(2), degs.count(3)
    bound = _ceil_half(s + n3) + 4
    low = n2 + n3
    one = two = None
    if len(odd) == 1:
        k = odd[0]
        one = (k, _ceil_half(k) + 2, low >= _ceil_half(k) + 2)
    if sorted(odd) == [6, 6]:
        need = 7 if n3 >= 1 else 6
        two = (need, low >= need)
    return LowDegreeReport(s, n2, n3, bound, low >= bound, one, two)


@dataclass(frozen=True)
class FaceClass:
    kind: str
    degree: int
    fake_count: int

    def __str__(self) -> str:
        if self.kind == OTHER:
            return f"Other({self.degree},{self.fake_count})"
        return self.kind


def _kind(deg: int, c: int) -> str:
    if deg == 3:
        return FAKE3 if c == 1 else TRUE3 if c == 0 else OTHER
    if deg == 4:
        return (TRUE4, SINGLE_FAKE4, ALTERNATING4)[c] if c <= 2 else OTHER
    if deg == 5 and c == 2:
        return ALMOST_ALTERNATING5
    return OTHER


def classify_face(d: OnePlaneDrawing, fid: int) -> FaceClass:
    f = d.face(fid)
    c = fake_count(d, fid)
    cls = FaceClass(_kind(f.degree, c), f.degree, c)
    if cls.kind == ALTERNATING4:
        vs = f.vertices
        if any(vs[i] < d.n and vs[(i + 1) % 4] < d.n for i in range(4)):
            raise InvariantViolation(f"alternating face {fid} has a true edge")
    return cls


def classify_faces(d: OnePlaneDrawing) -> dict[int, FaceClass]:
    return {f.id: classify_face(d, f.id) for f in d.faces}


def class_histogram(d: OnePlaneDrawing) -> dict[str, int]:
    return dict(sorted(Counter(str(c) for c in classify_faces(d).values()).items()))


def crossing_skeleton(d: OnePlaneDrawing) -> OnePlaneDrawing:
    """Spanning sub-drawing on the crossed edges only."""
    keep = [e for e in range(d.m) if d.is_crossed(e)]
    new_id = {e: i for i, e in enumerate(keep)}
    crossings = [
        type(cr)(new_id[cr.e], new_id[cr.f], cr.positive) for cr in d.crossings
    ]
    rotations = [[new_id[e] for e in rot if e in new_id] for rot in d.rotations]
    return OnePlaneDrawing(d.n, [d.edges[e] for e in keep], crossings, rotations, d.labels)


def alternating_vertices(d: OnePlaneDrawing) -> set[int]:
    """Non-isolated true vertices whose every incident face is an alternating 4-face."""
    classes = classify_faces(d)
    return {
        u
        for u in range(d.n)
        if d.faces_at[u] and all(classes[f].kind == ALTERNATING4 for f in d.faces_at[u])
    }


def triangle_corners(d: OnePlaneDrawing, z: int) -> list[int]:
    """Corner positions (0..3 in rotation order) of fake vertex ``z`` lying in 3-faces."""
    return [i for i, f in enumerate(d.faces_at[z]) if d.faces[f].degree == 3]


def fake_triangle_check(d: OnePlaneDrawing, require_k3free: bool = True) -> bool:
    """3-faces around fake vertices.

    With ``require_k3free``: every fake vertex has at most two 3-face corners,
    two of them only at opposite corners, and ``A >= 0``. Otherwise the
    drawing must be K4-free and every fake vertex needs a corner in a face of
    degree at least 4, giving ``A >= -x``.
    """
    g = d.abstract_graph()
    r = compute_invariants(d)
    if require_k3free:
        if g.has_clique(3):
            raise PreconditionNotK3Free(f"triangle on {g.find_clique(3)}")
        for z in range(d.n, d.n_prime):
            tri = triangle_corners(d, z)
            if len(tri) > 2 or (len(tri) == 2 and tri[1] - tri[0] != 2):
                return False
        return r.A >= 0
    if g.has_clique(4):
        raise NotK4Free(f"K4 on {g.find_clique(4)}")
    return all(a >= 1 for a in r.a_values.values()) and r.A >= -d.x


def fake_structure_ok(d: OnePlaneDrawing) -> bool:
    """Fake vertices are pairwise non-adjacent and no face carries more than
    half its degree in fake occurrences."""
    for z in range(d.n, d.n_prime):
        if any(w >= d.n for w in d.planarization_neighbors(z)):
            return False
    return all(fake_count(d, f.id) <= f.degree // 2 for f in d.faces)


def face_bounded_by_cycle(d: OnePlaneDrawing, fid: int) -> bool:
    vs = d.face(fid).vertices
    return len(vs) >= 3 and len(set(vs)) == len(vs)


def sole_exceptional_face(d: OnePlaneDrawing) -> int | None:
    """The face bounded by a cycle with every other face Fake3 or
    Alternating4, if the drawing has exactly that shape."""
    classes = classify_faces(d)
    odd = [f for f, c in classes.items() if c.kind not in (FAKE3, ALTERNATING4)]
    if len(odd) == 1 and face_bounded_by_cycle(d, odd[0]):
        return odd[0]
    return None


def two_single_fake_shape(d: OnePlaneDrawing) -> bool:
    """Exactly two SingleFake4 faces, every other face of degree >= 4 is
    Alternating4, and each fake vertex has exactly two 3-face corners, opposite."""
    classes = classify_faces(d)
    big = [c.kind for c in classes.values() if c.degree >= 4]
    if big.count(SINGLE_FAKE4) != 2:
        return False
    if any(k not in (SINGLE_FAKE4, ALTERNATING4) for k in big):
        return False
    for z in range(d.n, d.n_prime):
        tri = triangle_corners(d, z)
        if len(tri) != 2 or tri[1] - tri[0] != 2:
            return False
        if any(classes[d.faces_at[z][i]].kind != FAKE3 for i in tri):
            return False
    return True
