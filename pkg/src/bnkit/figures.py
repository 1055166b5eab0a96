"""Static figures: the Mor complex of a torus-link closure laid out on the
(h, q) grid, and the lift of a rational curve to the plane minus the
half-integer lattice."""

from __future__ import annotations

import json
from fractions import Fraction

from .exact import FreeBigradedComplex
from .pairing import closure_complex
from .typed import build_qn

GRID_GUARD = 12


def grid_complex(n: int, c=2) -> FreeBigradedComplex:
    if n % 2:
        raise ValueError("the grid figure is drawn for even n only")
    if abs(n) > GRID_GUARD:
        raise ValueError(f"|n| = {abs(n)} exceeds the grid guard {GRID_GUARD}")
    return closure_complex(build_qn(n, c))


def _edge_label(coeff, m: int) -> str:
    if m == 0:
        return str(coeff)
    h = "H" if m == 1 else f"H^{m}"
    if coeff == 1:
        return f"x{h}"
    return f"x{coeff}{h}"


def _grid_data(n: int, c):
    cx = grid_complex(n, c)
    nodes = [(g.h, g.q, gid) for gid, g in cx.generators]
    edges = []
    for (j, i), p in sorted(cx.differential.items()):
        gi, gj = cx.grading(i), cx.grading(j)
        edges.append((gi.h, gi.q, gj.h, gj.q, _edge_label(p.lead, p.degree), cx.generators[i][0], cx.generators[j][0]))
    return cx, sorted(nodes), sorted(edges)


def grid_tsv(n: int, c=2) -> str:
    cx, nodes, edges = _grid_data(n, c)
    out = [f"# Mor(•(0,0), Q_{n}) over {cx.field.name}; columns h, q", "kind\th\tq\tid"]
    for h, q, gid in nodes:
        out.append(f"node\t{h}\t{q}\t{gid}")
    out.append("kind\tsrc_h\tsrc_q\tdst_h\tdst_q\tlabel\tsrc\tdst")
    for e in edges:
        out.append("edge\t" + "\t".join(str(x) for x in e))
    return "\n".join(out) + "\n"


def _svg_header(w: int, h: int) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]


def grid_svg(n: int, c=2, cell: int = 48) -> str:
    cx, nodes, edges = _grid_data(n, c)
    hs = [x[0] for x in nodes]
    qs = [x[1] for x in nodes]
    h0, h1 = min(hs) - 1, max(hs) + 1
    q0, q1 = min(qs) - 2, max(qs) + 2
    pad = 56
    width = pad + (h1 - h0 + 1) * cell
    height = pad + (q1 - q0 + 1) * cell // 2

    def px(h: int, q: int) -> tuple[int, int]:
        # quantum degrees of one parity only occur, so two q-steps per cell
        return pad + (h - h0) * cell, pad // 2 + (q1 - q) * cell // 2

    out = _svg_header(width, height)
    out.append('<g stroke="#ccc" stroke-width="1">')
    for h in range(h0, h1 + 1):
        x, _ = px(h, 0)
        out.append(f'<line x1="{x}" y1="{pad // 2}" x2="{x}" y2="{height}"/>')
    out.append("</g>")
    out.append('<g font-family="sans-serif" font-size="11" fill="#444">')
    for h in range(h0, h1 + 1):
        x, _ = px(h, q0)
        out.append(f'<text x="{x}" y="{height - 4}" text-anchor="middle">{h}</text>')
    for q in range(q0, q1 + 1, 2):
        _, y = px(h0, q)
        out.append(f'<text x="{pad // 2}" y="{y + 4}" text-anchor="end">{q}</text>')
    out.append("</g>")
    out.append('<g stroke="black" stroke-width="1.5" font-family="sans-serif" font-size="11">')
    for sh, sq, dh, dq, label, _, _ in edges:
        x1, y1 = px(sh, sq)
        x2, y2 = px(dh, dq)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
        out.append(
            f'<text x="{(x1 + x2) // 2}" y="{(y1 + y2) // 2 - 4}" stroke="none" fill="#a00">{label}</text>'
        )
    out.append("</g>")
    out.append('<g font-family="serif" font-size="13">')
    seen: dict[tuple[int, int], int] = {}
    for h, q, gid in nodes:
        k = seen.get((h, q), 0)
        seen[(h, q)] = k + 1
        x, y = px(h, q)
        out.append(
            f'<text x="{x + 6 * k}" y="{y + 4}" text-anchor="middle"><title>{gid}</title>k[H]</text>'
        )
    out.append("</g>")
    out.append(
        f'<text x="{width // 2}" y="14" text-anchor="middle" font-family="sans-serif" '
        f'font-size="12">Mor(•, Q_{n}) over {cx.field.name}</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_grid(n: int, c=2, fmt: str = "tsv") -> str:
    if fmt == "tsv":
        return grid_tsv(n, c)
    if fmt == "svg":
        return grid_svg(n, c)
    raise ValueError(f"unsupported grid format {fmt!r}")


LIFT_BASEPOINT = (Fraction(0), Fraction(1, 4))


def curve_lift(n: int, window: int = 2) -> dict:
    """Line of slope ``n`` through (0, 1/4) over ``|x| <= window``.

    The basepoint was picked so the line misses every point of (Z/2)^2.
    Integer lattice points are the lifts of the marked puncture.
    """
    x0, y0 = LIFT_BASEPOINT
    xs = [Fraction(-window), Fraction(window)]
    points = [(x, y0 + n * (x - x0)) for x in xs]
    punctures = [
        (Fraction(a, 2), Fraction(b, 2))
        for a in range(-2 * window, 2 * window + 1)
        for b in range(-2 * window, 2 * window + 1)
    ]
    slope = (points[1][1] - points[0][1]) / (points[1][0] - points[0][0])
    return {
        "n": n,
        "slope": slope,
        "basepoint": LIFT_BASEPOINT,
        "points": points,
        "punctures": punctures,
    }


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def curve_lift_json(n: int, window: int = 2) -> str:
    data = curve_lift(n, window)
    out = {
        "n": n,
        "slope": _frac(data["slope"]),
        "basepoint": [_frac(v) for v in data["basepoint"]],
        "points": [[_frac(x), _frac(y)] for x, y in data["points"]],
        "punctures": [
            {"x": _frac(x), "y": _frac(y), "marked": x.denominator == 1 and y.denominator == 1}
            for x, y in data["punctures"]
        ],
    }
    return json.dumps(out, indent=2) + "\n"


def curve_lift_svg(n: int, window: int = 2, unit: int = 60) -> str:
    data = curve_lift(n, window)
    xmin, xmax = Fraction(-window), Fraction(window)
    ymin, ymax = xmin, xmax
    width = int((xmax - xmin) * unit) + 40
    height = int((ymax - ymin) * unit) + 40

    def px(x: Fraction, y: Fraction) -> tuple[str, str]:
        return (f"{float(20 + (x - xmin) * unit):.2f}", f"{float(20 + (ymax - y) * unit):.2f}")

    out = _svg_header(width, height)
    out.append(f'<clipPath id="win"><rect x="20" y="20" width="{width - 40}" height="{height - 40}"/></clipPath>')
    out.append('<g clip-path="url(#win)">')
    for x, y in data["punctures"]:
        cx, cy = px(x, y)
        if x.denominator == 1 and y.denominator == 1:
            out.append(f'<circle cx="{cx}" cy="{cy}" r="4" fill="black"/>')
        else:
            out.append(f'<circle cx="{cx}" cy="{cy}" r="3" fill="white" stroke="black"/>')
    (ax, ay), (bx, by) = data["points"]
    x1, y1 = px(ax, ay)
    x2, y2 = px(bx, by)
    out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#c00" stroke-width="2"/>')
    out.append("</g>")
    out.append(
        f'<text x="{width // 2}" y="14" text-anchor="middle" font-family="sans-serif" '
        f'font-size="12">lift of the curve of Q_{n}: slope {n}</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
