"""Command line front end: file parsing, reports and SVG plots.

Usage::

    latticewidth width POLYFILE [--json] [--oracle] [--trace]
    latticewidth toric POLYFILE|EMBFILE [--direction m,n | --optimal] [--json]
    latticewidth surface SURFFILE [--chain] [--json]
    latticewidth plot POLYFILE -o OUT.svg

Exit status is 0 on success, 1 on a domain error and 2 on usage or I/O
problems.  Machine output (``--json``) is canonical JSON with sorted keys,
so identical inputs give byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ChainError, DegeneratePolygon, LatticeWidthError
from .picard import DivisorClass, solve_min_degree, surface_from_basepoints
from .polygon import LatticePolygon, adjoint, convex_hull
from .toric import MonomialEmbedding, fibration_exponents, optimal_toric_families
from .width import WidthReport, solve, solve_bruteforce

PITCH = 24
MARGIN = 24


class InputFormatError(ValueError):
    """An input file is unreadable or does not match its declared layout."""


# ---------------------------------------------------------------------------
# input files


def _load_json(path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path}: not valid JSON ({exc.msg})") from exc
    if not isinstance(doc, dict):
        raise InputFormatError(f"{path}: top level must be an object")
    return doc


def _int_pairs(doc, key, path):
    raw = doc.get(key)
    if not isinstance(raw, list):
        raise InputFormatError(f"{path}: '{key}' must be a list of [x, y] pairs")
    out = []
    for item in raw:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(c, int) and not isinstance(c, bool) for c in item)
        ):
            raise InputFormatError(f"{path}: bad entry {item!r} in '{key}'")
        out.append((item[0], item[1]))
    return out


def read_polygon(path) -> LatticePolygon:
    """Polygon file: ``{"points": [[x, y], ...]}``; the hull is recomputed."""
    return convex_hull(_int_pairs(_load_json(path), "points", path))


def read_embedding(path) -> MonomialEmbedding:
    """Embedding file: ``{"exponents": [[a, b], ...]}`` in coordinate order.

    A polygon file is accepted as well and embeds by all its lattice points.
    """
    doc = _load_json(path)
    if "exponents" in doc:
        try:
            return MonomialEmbedding(tuple(_int_pairs(doc, "exponents", path)))
        except ValueError as exc:
            if isinstance(exc, LatticeWidthError):
                raise
            raise InputFormatError(f"{path}: {exc}") from exc
    if "points" in doc:
        return MonomialEmbedding.of_polygon(convex_hull(_int_pairs(doc, "points", path)))
    raise InputFormatError(f"{path}: expected 'exponents' or 'points'")


def read_surface(path):
    """Surface file with ``parametric_degree``, ``multiplicities`` and optional ``labels``."""
    doc = _load_json(path)
    d = doc.get("parametric_degree")
    mult = doc.get("multiplicities")
    labels = doc.get("labels")
    if not isinstance(d, int) or isinstance(d, bool):
        raise InputFormatError(f"{path}: 'parametric_degree' must be an integer")
    if not isinstance(mult, list) or not all(
        isinstance(m, int) and not isinstance(m, bool) and m >= 0 for m in mult
    ):
        raise InputFormatError(f"{path}: 'multiplicities' must be non-negative integers")
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
            raise InputFormatError(f"{path}: 'labels' must be a list of strings")
        if len(labels) != len(mult):
            raise InputFormatError(f"{path}: 'labels' and 'multiplicities' differ in length")
    return surface_from_basepoints(d, mult, labels)


# ---------------------------------------------------------------------------
# reports


@dataclass
class Report:
    """Structured result of one verb.

    ``data`` holds only JSON scalars, lists and dicts, so the machine
    rendering is lossless and ``parse_report(render_machine(r)) == r``.
    """

    verb: str
    data: dict = field(default_factory=dict)


def render_machine(report: Report) -> str:
    return json.dumps({"verb": report.verb, "data": report.data}, sort_keys=True, separators=(",", ":"))


def parse_report(text: str) -> Report:
    doc = json.loads(text)
    return Report(doc["verb"], doc["data"])


def _fmt_dir(h) -> str:
    return f"({h[0]},{h[1]})"


def _display_order(h):
    # shortest directions first; among equals, larger m first
    return (abs(h[0]) + abs(h[1]), -h[0], h[1])


def _class_data(c: DivisorClass, labels) -> dict:
    return {"l": c.l, "e": list(c.e), "text": _class_text(c, labels)}


def _class_text(c: DivisorClass, labels) -> str:
    out = f"{c.l}L" if c.l not in (0, 1, -1) else {0: "", 1: "L", -1: "-L"}[c.l]
    for a, name in zip(c.e, labels):
        if a == 0:
            continue
        coef = "" if abs(a) == 1 else str(abs(a))
        sign = "+" if a > 0 else "-"
        out += f"{sign}{coef}{name}"
    if not out:
        return "0"
    return out.lstrip("+")


class OracleMismatch(LatticeWidthError):
    """The recursive solver and the exhaustive search disagree."""


def width_report(poly: LatticePolygon, oracle=False, trace=False) -> Report:
    rep = solve(poly)
    data = {
        "v": rep.width,
        "S": [list(h) for h in rep.optimal],
        "finite": rep.finite,
        "vertices": poly.as_lists(),
    }
    if oracle:
        ref = solve_bruteforce(poly)
        if (ref.width, ref.optimal) != (rep.width, rep.optimal):
            raise OracleMismatch(
                f"recursion gives v={rep.width} S={list(rep.optimal)}, "
                f"enumeration gives v={ref.width} S={list(ref.optimal)}"
            )
        data["oracle"] = "agree"
    if trace:
        data["trace"] = [{"case": label.value, "vertices": p.as_lists()} for p, label in rep.trace]
    return Report("width", data)


def _descriptor_data(desc) -> dict:
    return {"h": list(desc.h), "e": list(desc.e), "degree": desc.degree, "map": desc.monomial_map()}


def toric_report(emb: MonomialEmbedding, direction=None) -> Report:
    if direction is not None:
        desc = fibration_exponents(emb, direction)
        return Report("toric", {"exponents": [list(p) for p in emb.exponents], "families": [_descriptor_data(desc)]})
    v, descs = optimal_toric_families(emb)
    return Report(
        "toric",
        {"exponents": [list(p) for p in emb.exponents], "v": v, "families": [_descriptor_data(d) for d in descs]},
    )


def surface_report(model, chain=False) -> Report:
    rep = solve_min_degree(model)
    labels = model.labels
    data = {
        "v": rep.v,
        "families": [_class_data(f, labels) for f in rep.optimal_families],
        "kind": rep.terminal_kind,
        "tight": rep.tight,
        "exhaustive": rep.exhaustive,
        "labels": list(labels),
    }
    if chain:
        data["chain"] = [
            {"l": l, "m": mult, "case": case.value}
            for (l, mult), (_, case) in zip(rep.table(), rep.steps)
        ]
    return Report("surface", data)


def render_text(report: Report) -> str:
    d = report.data
    if report.verb == "width":
        dirs = ",".join(_fmt_dir(h) for h in sorted(d["S"], key=_display_order))
        lines = [f"v = {d['v']}, S = {{{dirs}}}"]
        if not d["finite"]:
            lines.append("(segment: width 0 in the listed direction only)")
        if "oracle" in d:
            lines.append("oracle: enumeration agrees")
        for depth, step in enumerate(d.get("trace", ())):
            verts = " ".join(_fmt_dir(p) for p in step["vertices"])
            lines.append(f"  level {depth}: {step['case']}  {verts}")
        return "\n".join(lines)
    if report.verb == "toric":
        lines = []
        if "v" in d:
            lines.append(f"v = {d['v']}")
        for fam in d["families"]:
            e = " ".join(str(x) for x in fam["e"])
            lines.append(f"h = {_fmt_dir(fam['h'])}: {fam['map']}  degree {fam['degree']}  e = [{e}]")
        return "\n".join(lines)
    if report.verb == "surface":
        lines = []
        if "chain" in d:
            labels = d["labels"]
            head = ["", "L"] + [f"-{s}" for s in labels] + ["case"]
            rows = [head]
            for i, step in enumerate(d["chain"]):
                mult = ["-" if m is None else str(m) for m in step["m"]]
                rows.append([f"D{i}", str(step["l"])] + mult + [step["case"]])
            widths = [max(len(r[j]) for r in rows) for j in range(len(head))]
            for r in rows:
                lines.append("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip())
        lines.append(f"v = {d['v']}")
        fams = ", ".join(f["text"] for f in d["families"])
        note = "" if d["exhaustive"] else " (not an exhaustive list)"
        lines.append(f"families: {{{fams}}}{note}  [{d['kind']}]")
        return "\n".join(lines)
    if report.verb == "plot":
        return f"wrote {d['path']}"
    raise ValueError(f"unknown verb {report.verb!r}")


# ---------------------------------------------------------------------------
# SVG


def _chain_polygons(poly: LatticePolygon):
    out = [poly]
    while True:
        inner = adjoint(out[-1])
        if inner is None:
            return out
        out.append(inner)


def svg_document(poly: LatticePolygon, report: WidthReport) -> str:
    """Standalone SVG of the polygon, its adjoint chain and optimal level lines."""
    if poly.dim < 2:
        raise DegeneratePolygon("plotting needs a two-dimensional polygon")
    x0, y0, x1, y1 = poly.bbox()
    W = (x1 - x0) * PITCH + 2 * MARGIN
    H = (y1 - y0) * PITCH + 2 * MARGIN

    def px(p):
        # y grows upward on the lattice, downward in SVG
        return (MARGIN + (p[0] - x0) * PITCH, MARGIN + (y1 - p[1]) * PITCH)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {W} {H}" width="{W}" height="{H}">',
        '<g class="dots" fill="#999">',
    ]
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            cx, cy = px((x, y))
            parts.append(f'<circle cx="{cx}" cy="{cy}" r="2"/>')
    parts.append("</g>")

    palette = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd"]
    for k, h in enumerate(report.optimal):
        parts.append(f'<g class="levels" data-h="{h[0]},{h[1]}" stroke="{palette[k % 4]}" stroke-width="1" opacity="0.6">')
        vals = [h[0] * v.x + h[1] * v.y for v in poly.vertices]
        for c in range(min(vals), max(vals) + 1):
            a, b = _clip_level(h, c, (x0, y0, x1, y1))
            (ax, ay), (bx, by) = px(a), px(b)
            parts.append(f'<line x1="{ax:g}" y1="{ay:g}" x2="{bx:g}" y2="{by:g}" data-c="{c}"/>')
        parts.append("</g>")

    for depth, p in enumerate(_chain_polygons(poly)):
        if p.dim == 0:
            cx, cy = px(p.vertices[0])
            parts.append(f'<circle class="chain" data-depth="{depth}" cx="{cx}" cy="{cy}" r="4" fill="black"/>')
            continue
        pts = " ".join("{},{}".format(*px(v)) for v in p.vertices)
        tag = "polygon" if p.dim == 2 else "polyline"
        parts.append(
            f'<{tag} class="chain" data-depth="{depth}" points="{pts}" fill="none" '
            f'stroke="black" stroke-width="{2 if depth == 0 else 1.5}"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _clip_level(h, c, box):
    """Endpoints of the line m*x + n*y = c inside the (closed) bounding box."""
    m, n = h
    xa, ya, xb, yb = box
    pts = []
    if n != 0:
        for x in (xa, xb):
            y = (c - m * x) / n
            if ya <= y <= yb:
                pts.append((x, y))
    if m != 0:
        for y in (ya, yb):
            x = (c - n * y) / m
            if xa <= x <= xb:
                pts.append((x, y))
    pts = sorted(set(pts))
    if not pts:
        # cannot happen for levels attained on the polygon; keep a point anyway
        return (xa, ya), (xa, ya)
    return pts[0], pts[-1]


def emit_svg(poly: LatticePolygon, report: WidthReport, out) -> Path:
    text = svg_document(poly, report)
    path = Path(out)
    path.write_text(text, encoding="utf-8")
    return path


# ---------------------------------------------------------------------------
# argument handling


def _direction(text):
    try:
        m, n = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected m,n but got {text!r}") from None
    return (m, n)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="latticewidth", description="Lattice width, toric families and adjoint chains.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    w = sub.add_parser("width", help="width and optimal directions of a polygon file")
    w.add_argument("input")
    w.add_argument("--json", action="store_true")
    w.add_argument("--oracle", action="store_true", help="cross-check against exhaustive search")
    w.add_argument("--trace", action="store_true", help="list the case of every adjoint level")

    t = sub.add_parser("toric", help="fibration exponents of an embedding")
    t.add_argument("input")
    t.add_argument("--json", action="store_true")
    g = t.add_mutually_exclusive_group()
    g.add_argument("--direction", type=_direction, metavar="m,n")
    g.add_argument("--optimal", action="store_true", help="all optimal directions (default)")

    s = sub.add_parser("surface", help="minimal rational degree of a blown-up plane")
    s.add_argument("input")
    s.add_argument("--json", action="store_true")
    s.add_argument("--chain", action="store_true", help="print the full adjoint chain")

    pl = sub.add_parser("plot", help="SVG of a polygon with adjoint chain and level lines")
    pl.add_argument("input")
    pl.add_argument("-o", dest="output", metavar="PATH", help="defaults to INPUT with .svg suffix")
    pl.add_argument("--json", action="store_true")
    return p


def _execute(args) -> Report:
    if args.verb == "width":
        return width_report(read_polygon(args.input), oracle=args.oracle, trace=args.trace)
    if args.verb == "toric":
        return toric_report(read_embedding(args.input), args.direction)
    if args.verb == "surface":
        return surface_report(read_surface(args.input), chain=args.chain)
    poly = read_polygon(args.input)
    out = args.output or str(Path(args.input).with_suffix(".svg"))
    try:
        emit_svg(poly, solve(poly), out)
    except OSError as exc:
        raise InputFormatError(f"cannot write {out}: {exc.strerror or exc}") from exc
    return Report("plot", {"path": out})


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        report = _execute(args)
    except InputFormatError as exc:
        print(f"input error: {exc}", file=stderr)
        return 2
    except LatticeWidthError as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        if isinstance(exc, ChainError) and exc.partial:
            print(f"  chain reached {len(exc.partial)} model(s); last D = {exc.partial[-1].D}", file=stderr)
        return 1
    print(render_machine(report) if args.json else render_text(report), file=stdout)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
