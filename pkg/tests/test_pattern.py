import json
import random
import xml.etree.ElementTree as ET

import pytest

from conftest import GOLDEN
from weakfrieze import (
    DiagonalMap, NonUnitEdge, Polygon, TROPICAL, cc_frieze, check_unimodular,
    emit_json, emit_svg, emit_text, enumerate_tpaths, render_pattern, trivial_map,
    triangulations, validate_dissection,
)
from weakfrieze.generate import random_rational
from weakfrieze.pattern import unimodular_witness

SVG = "{http://www.w3.org/2000/svg}"


def test_fig6_golden(fig1_map):
    grid = render_pattern(fig1_map)
    text = emit_text(grid, window=(5, 21))
    golden = (GOLDEN / "fig6.txt").read_text()
    assert [line.split() for line in text.splitlines()] == [line.split() for line in golden.splitlines()]
    assert text == golden


def test_fig1_rows(fig1_map):
    grid = render_pattern(fig1_map)
    assert len(grid.rows) == 8
    assert set(grid.rows[0]) == set(grid.rows[-1]) == {fig1_map(0, 1)}
    # f(4, 0) sits in row r = 5 at column 4, and again in row 4 at column 0
    assert str(grid.entry(4, 5)) == "4" and str(grid.entry(0, 4)) == "4"


def test_small_grids():
    sq = DiagonalMap(4, {(0, 1): 1, (1, 2): 1, (2, 3): 1, (0, 3): 1, (0, 2): 2, (1, 3): 1})
    grid = render_pattern(sq)
    assert [[str(x) for x in row] for row in grid.rows] == [
        ["1"] * 4, ["2", "1", "2", "1"], ["1"] * 4]
    assert check_unimodular(sq)
    assert all(str(x) == "1" for row in render_pattern(trivial_map(6)).rows for x in row)


def test_text_output_edge_cases():
    tri = trivial_map(3)
    assert emit_text(render_pattern(tri)).split() == ["1"] * 6
    text = emit_text(render_pattern(trivial_map(4, TROPICAL)))
    assert [line.split() for line in text.splitlines()] == [["0"] * 4] * 3
    wide = DiagonalMap(3, {(0, 1): "1/2", (1, 2): 3, (0, 2): "10/7"})
    lines = emit_text(render_pattern(wide)).splitlines()
    assert [line.split() for line in lines] == [["10/7", "1/2", "3"], ["1/2", "3", "10/7"]]


def test_repeat_columns(fig1_map):
    text = emit_text(render_pattern(fig1_map), repeat=3)
    assert all(len(line.split()) == 27 for line in text.splitlines())


@pytest.mark.parametrize("n", range(3, 10))
def test_round_trip_and_glide(n):
    rng = random.Random(n)
    p = Polygon(n)
    f = DiagonalMap(p, {e: random_rational(rng) for e in p.diagonals()})
    grid = render_pattern(f)
    for r in range(1, n):
        for i in range(n):
            assert grid.entry(i, r) == f(i, (i + r) % n)
            assert grid.rows[r - 1][i] == grid.rows[n - r - 1][(i + r) % n]
    assert grid.to_map() == f


def test_json_output(fig1_map):
    doc = json.loads(emit_json(render_pattern(fig1_map)))
    assert doc["n"] == 9 and len(doc["rows"]) == 8
    assert doc["rows"][4][4] == "4"


def test_unimodular(pentagon_fan, fig1_map):
    p, fan = pentagon_fan
    assert check_unimodular(cc_frieze(p, fan))
    assert not check_unimodular(fig1_map)
    assert unimodular_witness(fig1_map) is not None
    bad = trivial_map(5).replace({(0, 1): 2})
    with pytest.raises(NonUnitEdge):
        check_unimodular(bad)


@pytest.mark.parametrize("n", range(3, 9))
def test_unimodular_on_cc_friezes(n):
    for t in triangulations(Polygon(n)):
        assert check_unimodular(cc_frieze(n, t))


def _parse(svg):
    return ET.fromstring(svg.encode())


def test_svg_fig1(nonagon, fig1_map):
    p, d = nonagon
    root = _parse(emit_svg(p, d, fig1_map, query=(4, 0)))
    lines = root.findall(f"{SVG}line")
    assert len(root.findall(f"{SVG}circle")) == 9
    assert len([x for x in lines if x.get("class") == "dissection"]) == 2
    (q,) = [x for x in lines if x.get("class") == "query"]
    assert q.get("stroke-dasharray")
    # the nine dashed diagonals of the picture: those inside the three cells
    assert len([x for x in lines if x.get("class") == "valued"]) == 9


def test_svg_bare():
    root = _parse(emit_svg(Polygon(6)))
    assert root.findall(f"{SVG}line") == [] and root.findall(f"{SVG}polyline") == []
    assert len(root.findall(f"{SVG}polygon")) == 1


def test_svg_fig2(nonagon):
    p, d = nonagon
    paths = enumerate_tpaths(p, d, 4, 0)
    root = _parse(emit_svg(p, d, paths=paths))
    drawn = [x.get("data-path") for x in root.findall(f"{SVG}polyline")]
    assert drawn == [",".join(map(str, pi)) for pi in paths]
    assert len({x.get("stroke") for x in root.findall(f"{SVG}polyline")}) == 4


def test_svg_deterministic(nonagon, fig1_map):
    p, d = nonagon
    assert emit_svg(p, d, fig1_map) == emit_svg(p, d, fig1_map)
