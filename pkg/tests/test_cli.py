import io
import json
import re
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest
from hypothesis import HealthCheck, given, settings

from conftest import polygons
from latticewidth.cli import (
    PITCH,
    Report,
    emit_svg,
    parse_report,
    render_machine,
    run,
    svg_document,
    width_report,
)
from latticewidth.errors import DegeneratePolygon
from latticewidth.polygon import convex_hull, shoe
from latticewidth.width import solve

DATA = Path(__file__).resolve().parent.parent / "data"
SVG = "{http://www.w3.org/2000/svg}"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc) if not isinstance(doc, str) else doc)
    return str(p)


class TestWidthVerb:
    def test_text(self):
        code, out, _ = call("width", str(DATA / "toricfam.poly"))
        assert code == 0
        assert out.strip() == "v = 2, S = {(1,0),(0,1),(1,1)}"

    def test_json_sorted(self):
        code, out, _ = call("width", str(DATA / "toricfam.poly"), "--json")
        doc = json.loads(out)
        assert doc["data"]["S"] == [[0, 1], [1, 0], [1, 1]]
        assert doc["data"]["v"] == 2

    def test_oracle_and_trace(self):
        code, out, _ = call("width", str(DATA / "quartic_triangle.poly"), "--oracle", "--trace")
        assert code == 0
        assert "oracle: enumeration agrees" in out
        assert "level 0: A1" in out and "level 1: A0" in out

    def test_vertex_order_irrelevant(self, tmp_path):
        a = write(tmp_path, "a.poly", {"points": [[0, 0], [3, 0], [0, 3], [1, 1]]})
        b = write(tmp_path, "b.poly", {"points": [[1, 1], [0, 3], [3, 0], [0, 0]]})
        assert call("width", a, "--json")[1] == call("width", b, "--json")[1]

    def test_missing_file(self):
        code, _, err = call("width", "missing.poly")
        assert code == 2 and "cannot read" in err

    def test_unknown_flag(self):
        assert call("width", str(DATA / "toricfam.poly"), "--fast")[0] == 2

    def test_no_verb(self):
        assert call()[0] == 2

    def test_bad_json(self, tmp_path):
        assert call("width", write(tmp_path, "x.poly", "{points"))[0] == 2
        assert call("width", write(tmp_path, "y.poly", {"points": [[0, 0.5]]}))[0] == 2
        assert call("width", write(tmp_path, "z.poly", {"pts": []}))[0] == 2

    def test_domain_errors_exit_one(self, tmp_path):
        assert call("width", write(tmp_path, "e.poly", {"points": []}))[0] == 1
        assert call("width", write(tmp_path, "p.poly", {"points": [[1, 1]]}))[0] == 1
        far = write(tmp_path, "f.poly", {"points": [[0, 0], [2000000, 0], [0, 1]]})
        assert call("width", far)[0] == 1


class TestToricVerb:
    def test_optimal(self):
        code, out, _ = call("toric", str(DATA / "toricfam.emb"), "--optimal")
        assert code == 0
        assert out.splitlines()[0] == "v = 2"
        assert "(x1 : x0)  degree 2" in out

    def test_direction(self):
        code, out, _ = call("toric", str(DATA / "toricfam.emb"), "--direction", "1,-1", "--json")
        fam = json.loads(out)["data"]["families"][0]
        assert fam["degree"] == 4 and fam["h"] == [1, -1]

    def test_polygon_file_accepted(self):
        code, out, _ = call("toric", str(DATA / "toricfam.poly"))
        assert code == 0 and out.startswith("v = 2")

    def test_bad_direction(self):
        assert call("toric", str(DATA / "toricfam.emb"), "--direction", "1")[0] == 2
        assert call("toric", str(DATA / "toricfam.emb"), "--direction", "2,0")[0] == 1

    def test_exclusive_flags(self):
        assert call("toric", str(DATA / "toricfam.emb"), "--direction", "1,0", "--optimal")[0] == 2


class TestSurfaceVerb:
    def test_chain_table(self):
        code, out, _ = call("surface", str(DATA / "deg8.surf"), "--chain")
        assert code == 0
        rows = [l.split() for l in out.splitlines() if re.match(r"D\d", l)]
        assert [r[1] for r in rows] == ["19", "16", "13", "10", "7", "4", "1"]
        assert rows[4][1:] == ["7", "3"] + ["2"] * 8 + ["-", "B4"]
        assert rows[6][1:] == ["1", "1"] + ["-"] * 9 + ["B0"]
        assert "v = 12" in out.splitlines()
        assert "{L-E1}" in out

    def test_labels(self, tmp_path):
        f = write(tmp_path, "s.surf", {"parametric_degree": 4, "multiplicities": [1] * 12, "labels": [f"p{i}" for i in range(12)]})
        code, out, _ = call("surface", f)
        assert code == 0 and "L-p0" in out and "v = 3" in out

    def test_not_mprs(self, tmp_path):
        f = write(tmp_path, "s.surf", {"parametric_degree": 2, "multiplicities": [1, 1]})
        code, _, err = call("surface", f)
        assert code == 1 and "NotMprs" in err

    def test_malformed(self, tmp_path):
        assert call("surface", write(tmp_path, "a.surf", {"parametric_degree": "4", "multiplicities": []}))[0] == 2
        assert call("surface", write(tmp_path, "b.surf", {"parametric_degree": 4, "multiplicities": [-1]}))[0] == 2
        bad_labels = {"parametric_degree": 4, "multiplicities": [1], "labels": ["a", "b"]}
        assert call("surface", write(tmp_path, "c.surf", bad_labels))[0] == 2


class TestMachineOutput:
    @pytest.mark.parametrize(
        "argv",
        [
            ("width", "toricfam.poly", "--trace", "--oracle"),
            ("toric", "toricfam.emb"),
            ("toric", "toricfam.emb", "--direction", "1,-1"),
            ("surface", "deg8.surf", "--chain"),
        ],
    )
    def test_round_trip_and_determinism(self, argv):
        verb, name, *rest = argv
        first = call(verb, str(DATA / name), "--json", *rest)[1]
        second = call(verb, str(DATA / name), "--json", *rest)[1]
        assert first == second
        rep = parse_report(first)
        assert render_machine(rep) == first.strip()
        assert rep == parse_report(render_machine(rep))

    @settings(max_examples=40, suppress_health_check=[HealthCheck.filter_too_much])
    @given(polygons())
    def test_width_reports_round_trip(self, poly):
        rep = width_report(poly, trace=True)
        assert parse_report(render_machine(rep)) == rep

    def test_report_equality(self):
        assert Report("width", {"v": 1}) != Report("width", {"v": 2})


def _levels(root):
    return {g.get("data-h"): len(g.findall(f"{SVG}line")) for g in root.iter(f"{SVG}g") if g.get("class") == "levels"}


def _chain(root):
    return [e for e in root.iter() if e.get("class") == "chain"]


class TestSvg:
    def test_three_triangle(self, tmp_path):
        poly = shoe(3, 0, 3)
        root = ET.fromstring(svg_document(poly, solve(poly)))
        dots = [c for c in root.iter(f"{SVG}circle") if c.get("class") is None]
        assert len(dots) == 16
        assert len(_levels(root)) == 3
        assert len(_chain(root)) == 2  # triangle plus its single interior point

    def test_hexagon_bundles(self):
        poly = convex_hull([(0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1)])
        root = ET.fromstring(svg_document(poly, solve(poly)))
        assert _levels(root) == {"0,1": 3, "1,0": 3, "1,1": 3}

    def test_four_triangle_nesting(self):
        poly = shoe(4, 0, 4)
        root = ET.fromstring(svg_document(poly, solve(poly)))
        assert [e.tag for e in _chain(root)] == [f"{SVG}polygon", f"{SVG}polygon"]

    def test_viewbox_and_pitch(self):
        poly = shoe(2, 0, 2)
        root = ET.fromstring(svg_document(poly, solve(poly)))
        assert root.get("viewBox") == f"0 0 {2 * PITCH + 48} {2 * PITCH + 48}"

    def test_degenerate(self, tmp_path):
        seg = convex_hull([(0, 0), (3, 1)])
        with pytest.raises(DegeneratePolygon):
            emit_svg(seg, solve(seg), tmp_path / "s.svg")

    def test_plot_verb(self, tmp_path):
        out = tmp_path / "q.svg"
        code, text, _ = call("plot", str(DATA / "quartic_triangle.poly"), "-o", str(out))
        assert code == 0 and out.exists()
        ET.parse(out)
        assert call("plot", str(DATA / "quartic_triangle.poly"), "-o", str(tmp_path / "no" / "x.svg"))[0] == 2

    def test_plot_segment_exits_one(self, tmp_path):
        f = write(tmp_path, "seg.poly", {"points": [[0, 0], [2, 1]]})
        assert call("plot", f, "-o", str(tmp_path / "s.svg"))[0] == 1
