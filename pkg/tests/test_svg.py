from __future__ import annotations

import xml.etree.ElementTree as ET

from conftest import c4, disjoint_c4s, k4_crossed
from oneplane.constructions import gen_cube_g8, gen_k5_optimal
from oneplane.svg import layout, to_svg

NS = "{http://www.w3.org/2000/svg}"


def parse(d, title=None):
    return ET.fromstring(to_svg(d, title))


def test_svg_is_well_formed():
    root = parse(gen_cube_g8(), "G8 <cube>")
    assert root.tag == NS + "svg"
    circles = root.findall(f".//{NS}circle")
    assert len(circles) == 8
    assert "G8 <cube>" in "".join(root.itertext())


def test_every_vertex_placed_and_distinct():
    for d in (c4(), k4_crossed(), gen_cube_g8(), disjoint_c4s(), gen_k5_optimal(14)):
        pos = layout(d)
        assert set(pos) == set(range(d.n_prime))
        pts = {(round(x, 6), round(y, 6)) for x, y in pos.values()}
        assert len(pts) == d.n_prime


def test_svg_deterministic():
    assert to_svg(gen_cube_g8()) == to_svg(gen_cube_g8())
