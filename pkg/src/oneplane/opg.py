"""OPG text format.

::

    opg 1
    vertex <id> [label]
    edge <id> <u> <v>
    cross <id> <e> <f> <pos|neg>
    rot <vertex> e<edge> e<edge> ...

Lines may appear in any order after the header; ``#`` starts a comment.
Vertex, edge and crossing ids must be dense (``0..count-1``). Every vertex
with incident edges needs a ``rot`` line listing them counterclockwise.
Fake-vertex rotations follow from the ``pos``/``neg`` bit.
"""

from __future__ import annotations

from .drawing import Crossing, OnePlaneDrawing
from .errors import BadCrossOrientation, OPGSyntaxError, RotationMismatch

HEADER = "opg 1"


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        val = int(tok)
    except ValueError:
        raise OPGSyntaxError(f"{what} must be an integer, got {tok!r}", lineno) from None
    if val < 0:
        raise OPGSyntaxError(f"{what} must be non-negative", lineno)
    return val


def _dense(table: dict, what: str) -> list:
    if sorted(table) != list(range(len(table))):
        raise OPGSyntaxError(f"{what} ids must be 0..{len(table) - 1} without gaps")
    return [table[i] for i in range(len(table))]


def parse(text: str) -> OnePlaneDrawing:
    """Parse and validate OPG text; raises a ``DrawingError`` subclass."""
    vertices: dict[int, str | None] = {}
    edges: dict[int, tuple[int, int]] = {}
    crosses: dict[int, Crossing] = {}
    rots: dict[int, list[int]] = {}
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if not header_seen:
            if toks != ["opg", "1"]:
                raise OPGSyntaxError(f"expected header {HEADER!r}", lineno)
            header_seen = True
            continue
        kind = toks[0]
        if kind == "vertex":
            if len(toks) not in (2, 3):
                raise OPGSyntaxError("usage: vertex <id> [label]", lineno)
            vid = _int(toks[1], lineno, "vertex id")
            if vid in vertices:
                raise OPGSyntaxError(f"vertex {vid} declared twice", lineno)
            vertices[vid] = toks[2] if len(toks) == 3 else None
        elif kind == "edge":
            if len(toks) != 4:
                raise OPGSyntaxError("usage: edge <id> <u> <v>", lineno)
            eid = _int(toks[1], lineno, "edge id")
            if eid in edges:
                raise OPGSyntaxError(f"edge {eid} declared twice", lineno)
            edges[eid] = (_int(toks[2], lineno, "endpoint"), _int(toks[3], lineno, "endpoint"))
        elif kind == "cross":
            if len(toks) != 5:
                raise OPGSyntaxError("usage: cross <id> <e> <f> <pos|neg>", lineno)
            cid = _int(toks[1], lineno, "crossing id")
            if cid in crosses:
                raise OPGSyntaxError(f"crossing {cid} declared twice", lineno)
            if toks[4] not in ("pos", "neg"):
                raise BadCrossOrientation(
                    f"line {lineno}: orientation must be 'pos' or 'neg', got {toks[4]!r}"
                )
            crosses[cid] = Crossing(
                _int(toks[2], lineno, "edge id"),
                _int(toks[3], lineno, "edge id"),
                toks[4] == "pos",
            )
        elif kind == "rot":
            if len(toks) < 2:
                raise OPGSyntaxError("usage: rot <vertex> e<edge>...", lineno)
            vid = _int(toks[1], lineno, "vertex id")
            if vid in rots:
                raise RotationMismatch(f"second rotation for vertex {vid}", lineno)
            ring = []
            for tok in toks[2:]:
                if not tok.startswith("e"):
                    raise OPGSyntaxError(f"incidence must look like e<id>, got {tok!r}", lineno)
                ring.append(_int(tok[1:], lineno, "edge id"))
            rots[vid] = ring
        else:
            raise OPGSyntaxError(f"unknown record {kind!r}", lineno)
    if not header_seen:
        raise OPGSyntaxError(f"missing header {HEADER!r}")
    labels = _dense(vertices, "vertex")
    n = len(labels)
    for vid in rots:
        if vid >= n:
            raise RotationMismatch(f"rotation for undeclared vertex {vid}")
    rotations = [rots.get(u, []) for u in range(n)]
    return OnePlaneDrawing(
        n,
        _dense(edges, "edge"),
        _dense(crosses, "crossing"),
        rotations,
        labels,
    )


def serialize(d: OnePlaneDrawing) -> str:
    """Canonical OPG text; ``serialize(parse(serialize(d)))`` is byte-identical."""
    out = [HEADER]
    for u in range(d.n):
        lab = d.labels[u]
        out.append(f"vertex {u}" if lab is None else f"vertex {u} {lab}")
    for i, (u, v) in enumerate(d.edges):
        out.append(f"edge {i} {u} {v}")
    for c, cr in enumerate(d.crossings):
        out.append(f"cross {c} {cr.e} {cr.f} {'pos' if cr.positive else 'neg'}")
    for u in range(d.n):
        if d.rotations[u]:
            out.append(f"rot {u} " + " ".join(f"e{e}" for e in d.rotations[u]))
    return "\n".join(out) + "\n"


def read(path) -> OnePlaneDrawing:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def write(d: OnePlaneDrawing, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(d))
