import json
import os
import re
import xml.etree.ElementTree as ET

import pytest

from compactlocus import catalog, render
from compactlocus.errors import UnknownFormat
from compactlocus.loci import empty_locus, inflation_locus
from compactlocus.spaces import (
    ChromaticSpace,
    FinitePoset,
    PosetSubset,
    complement,
    finite_localization_locus,
    p_localization_subset,
    sh_localization_locus,
)

from conftest import GOLDENS

SVG_NS = "{http://www.w3.org/2000/svg}"
SVG_TAGS = {"svg", "title", "desc", "g", "circle", "line", "rect", "text", "path"}
EXT = {"svg": "svg", "dot": "dot", "ascii": "txt"}


def figure(name):
    if name == "infl_c5_c5":
        G = catalog.cyclic(5)
        return inflation_locus(G, G.classes[-1])
    if name == "infl_d10_d10":
        G = catalog.dihedral(10)
        return inflation_locus(G, G.classes[-1])
    raise KeyError(name)


def chain3():
    X = FinitePoset(["a", "b", "c"], [("a", "b"), ("b", "c")])
    Y = PosetSubset(X, {"c"}, "closed")
    return X, [finite_localization_locus(X, Y), complement(Y)]


def check_golden(name, fmt, data):
    path = GOLDENS / f"{name}.{EXT[fmt]}"
    if os.environ.get("LOCUS_REGEN_GOLDENS"):
        path.write_bytes(data)
    assert data == path.read_bytes()


@pytest.mark.parametrize("fmt", render.FORMATS)
@pytest.mark.parametrize("name", ["infl_c5_c5", "infl_d10_d10"])
def test_figure_goldens(name, fmt):
    a = render.render_eq_locus(figure(name), fmt)
    b = render.render_eq_locus(json.loads(figure(name).dumps()), fmt)
    assert a == b
    check_golden(name, fmt, a)


@pytest.mark.parametrize("fmt", render.FORMATS)
def test_poset_golden(fmt):
    X, subsets = chain3()
    check_golden("poset_chain3", fmt, render.render_poset(X, subsets, fmt))


def test_unknown_format():
    with pytest.raises(UnknownFormat):
        render.render_eq_locus(figure("infl_c5_c5"), "png")


def _svg_tags(data):
    root = ET.fromstring(data.split(b"?>", 1)[1].split(b">", 1)[1] if data.startswith(b"<?xml") else data)
    return root, {el.tag.replace(SVG_NS, "") for el in root.iter()}


@pytest.mark.parametrize("name", ["infl_c5_c5", "infl_d10_d10"])
def test_svg_is_well_formed(name):
    data = render.render_eq_locus(figure(name), "svg")
    assert data.startswith(b'<?xml version="1.0"')
    assert b'version="1.1"' in data
    root = ET.fromstring(re.sub(rb"<!DOCTYPE[^>]*>", b"", data))
    tags = {el.tag.replace(SVG_NS, "") for el in root.iter()}
    assert tags <= SVG_TAGS


def test_every_tower_point_appears_once():
    L = figure("infl_d10_d10")
    dot = render.render_eq_locus(L, "dot").decode()
    nodes = re.findall(r"^\s*(\w+) \[label=", dot, re.M)
    assert len(nodes) == len(set(nodes))
    # per class: one base plus one node per (column, row)
    per_class = 1 + len(L.spectrum.columns) * len(render.ROWS)
    assert len(nodes) == per_class * len(L.spectrum.classes)


def test_cyclic_ascii_shading():
    text = render.render_eq_locus(figure("infl_c5_c5"), "ascii").decode()
    rows = {line.split()[0]: line for line in text.splitlines() if line.strip()[:1].isdigit() or "inf" in line}
    left, right = rows["3"].split("|")[0], rows["3"].split("|")[1]
    assert left.split()[1:] == ["#", "#"]
    assert right.split() == [".", "#"]
    assert rows["1"].split()[1] == "#" and rows["1"].split("|")[1].split() == ["."]


def test_empty_locus_has_no_shading():
    G = catalog.dihedral(10)
    text = render.render_eq_locus(empty_locus(G), "ascii").decode()
    grid = [line for line in text.splitlines() if line.split()[:1] and line.split()[0] in ("1", "...", "inf", *"234567")]
    assert len(grid) == len(render.ROWS) + 1
    assert all("#" not in line and "o" not in line for line in grid)
    svg = render.render_eq_locus(empty_locus(G), "svg")
    assert render.LIGHT.encode() not in svg.split(b"</defs>")[-1].split(b"legend")[0]


def test_chromatic_render_two_levels():
    space = ChromaticSpace((2, 3, 5))
    Z = sh_localization_locus(space, p_localization_subset(space, 2))
    amb = {"columns": {"2": {"from": 2}, "3": None, "5": None}, "default": None, "generic": True}
    text = render.render_chromatic(Z, "ascii", ambient=amb).decode()
    assert "#" in text and "o" in text
    for fmt in render.FORMATS:
        assert render.render_chromatic(Z, fmt) == render.render_chromatic(Z.to_json(), fmt)


def test_poset_renders():
    single = FinitePoset(["x"])
    dot = render.render_poset(single, [], "dot").decode()
    assert dot.count('"x" [') == 1
    X = FinitePoset(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
    Y = PosetSubset(X, {"c", "d"}, "closed")
    svg = render.render_poset(X, [finite_localization_locus(X, Y), complement(Y)], "svg")
    ET.fromstring(re.sub(rb"<!DOCTYPE[^>]*>", b"", svg))
    for p in "abcd":
        assert svg.count(f">{p}</text>".encode()) == 1
    text = render.render_poset(X, [], "ascii").decode()
    assert "a" in text and "d" in text
