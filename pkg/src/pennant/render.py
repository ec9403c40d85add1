"""Diagram serialization: JSON, TSV, and a deterministic SVG scatterplot.

All three outputs are pure functions of the diagram (and style): fixed
key order, fixed number formatting (reals carry exactly 6 decimals in
JSON/TSV, pixel coordinates 2 in SVG), no timestamps, no randomness.
Rendering the same diagram twice yields identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .diagram import PennantDiagram, PennantParams, PennantPoint
from .weighting import logb

ELLIPSIS = "…"

SECTOR_FILL = {"A": "#e9f1e9", "B": "#f7f7f1", "C": "#f4eaea"}
SECTOR_STROKE = {"A": "#2e7d32", "B": "#1f5fa8", "C": "#b3422e"}
SEED_COLOR = "#111111"
FONT_STACK = "DejaVu Sans, Helvetica, Arial, sans-serif"


def _fmt6(value: float) -> str:
    if value == 0:
        value = 0.0  # never emit -0.000000
    return f"{value:.6f}"


# -- JSON ---------------------------------------------------------------


def to_json(diagram: PennantDiagram) -> str:
    """Serialize the diagram as a single JSON document.

    Real numbers are emitted as fixed 6-decimal strings so the payload is
    byte-stable and clients can display values verbatim; counts stay JSON
    integers.
    """
    p = diagram.params
    payload = {
        "seed": diagram.seed,
        "seed_df": diagram.seed_df,
        "seed_x": _fmt6(diagram.seed_x),
        "seed_y": _fmt6(diagram.seed_y),
        "n_docs": diagram.n_docs,
        "params": {
            "base": _fmt6(p.log_base),
            "n_override": p.n_override,
            "min_co": p.min_co,
            "top_k": p.top_k,
            "alpha": _fmt6(p.alpha),
            "gamma": _fmt6(p.gamma),
            "tau": _fmt6(p.tau),
        },
        "points": [
            {
                "term": pt.term,
                "co_count": pt.co_count,
                "df": pt.df,
                "x": _fmt6(pt.x),
                "y": _fmt6(pt.y),
                "sector": pt.sector,
                "dominant": pt.dominant,
            }
            for pt in diagram.points
        ],
    }
    return json.dumps(payload, indent=2, ensure_ascii=False)


def from_json(text: str) -> PennantDiagram:
    """Parse a diagram serialized by to_json back into a PennantDiagram.

    Coordinates come back quantized to the 6 decimals the JSON carries.
    """
    obj = json.loads(text)
    try:
        p = obj["params"]
        params = PennantParams(
            log_base=float(p["base"]),
            n_override=p["n_override"],
            min_co=p["min_co"],
            top_k=p["top_k"],
            alpha=float(p["alpha"]),
            gamma=float(p["gamma"]),
            tau=float(p["tau"]),
        )
        points = [
            PennantPoint(
                term=q["term"],
                co_count=q["co_count"],
                df=q["df"],
                x=float(q["x"]),
                y=float(q["y"]),
                sector=q["sector"],
                dominant=q["dominant"],
            )
            for q in obj["points"]
        ]
        return PennantDiagram(
            seed=obj["seed"],
            seed_df=obj["seed_df"],
            seed_x=float(obj["seed_x"]),
            seed_y=float(obj["seed_y"]),
            n_docs=obj["n_docs"],
            params=params,
            points=points,
        )
    except KeyError as exc:
        raise ValueError(f"malformed diagram JSON: missing {exc.args[0]!r}") from exc


# -- TSV ----------------------------------------------------------------

TSV_HEADER = "term\tco\tdf\tx\ty\tsector\tdominant"


def to_table(diagram: PennantDiagram) -> str:
    """Tab-separated listing of the points in diagram order."""
    lines = [TSV_HEADER]
    for pt in diagram.points:
        lines.append(
            "\t".join(
                (
                    pt.term,
                    str(pt.co_count),
                    str(pt.df),
                    _fmt6(pt.x),
                    _fmt6(pt.y),
                    pt.sector,
                    "true" if pt.dominant else "false",
                )
            )
        )
    return "\n".join(lines) + "\n"


# -- SVG ----------------------------------------------------------------


@dataclass(frozen=True)
class RenderStyle:
    width_px: int = 1200
    height_px: int = 700
    margin_px: int = 60
    show_sector_bands: bool = True
    label_max_chars: int = 40
    font_size_px: int = 12

    def __post_init__(self):
        if self.width_px <= 2 * self.margin_px or self.height_px <= 2 * self.margin_px:
            raise ValueError("plot area is empty: width/height must exceed 2*margin")


def _extent(values: list[float]) -> tuple[float, float]:
    lo, hi = min(values), max(values)
    if hi - lo == 0:
        return lo - 0.5, hi + 0.5  # degenerate: default 1-unit padded viewport
    pad = 0.05 * (hi - lo)
    return lo - pad, hi + pad


def _elide(label: str, max_chars: int) -> str:
    if len(label) <= max_chars:
        return label
    return label[: max_chars - 1] + ELLIPSIS


def _px(v: float) -> str:
    return f"{v:.2f}"


def to_svg(diagram: PennantDiagram, style: RenderStyle | None = None) -> str:
    """Render the diagram as a standalone SVG 1.1 document.

    Weight space maps linearly into the plot rectangle: x grows rightward,
    y grows upward. Sector bands are horizontal because sector membership
    depends only on df, hence only on y. Labels sit left of their markers
    with no collision avoidance; interactive de-overlap is a client-side
    concern.
    """
    style = style or RenderStyle()
    w, h, m = style.width_px, style.height_px, style.margin_px
    fs = style.font_size_px
    xlo, xhi = _extent([diagram.seed_x] + [p.x for p in diagram.points])
    ylo, yhi = _extent([diagram.seed_y] + [p.y for p in diagram.points])

    def px(x: float) -> float:
        return m + (x - xlo) / (xhi - xlo) * (w - 2 * m)

    def py(y: float) -> float:
        return h - m - (y - ylo) / (yhi - ylo) * (h - 2 * m)

    out: list[str] = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w}" height="{h}" viewBox="0 0 {w} {h}" '
        f'font-family="{FONT_STACK}" font-size="{fs}">'
    )
    out.append(f"<title>pennant: {escape(diagram.seed)} (N={diagram.n_docs})</title>")
    out.append(f'<rect width="{w}" height="{h}" fill="#ffffff"/>')

    if style.show_sector_bands:
        out.extend(_sector_bands(diagram, ylo, yhi, py, w, m, fs))

    # plot frame and ticks, labeled in weight units
    out.append(
        f'<rect x="{m}" y="{m}" width="{w - 2 * m}" height="{h - 2 * m}" '
        f'fill="none" stroke="#444444" stroke-width="1"/>'
    )
    for i in range(5):
        fx = xlo + (xhi - xlo) * i / 4
        gx = px(fx)
        out.append(
            f'<line x1="{_px(gx)}" y1="{h - m}" x2="{_px(gx)}" y2="{h - m + 4}" stroke="#444444"/>'
        )
        out.append(
            f'<text x="{_px(gx)}" y="{h - m + 5 + fs}" text-anchor="middle" '
            f'fill="#333333">{fx:.3f}</text>'
        )
        fy = ylo + (yhi - ylo) * i / 4
        gy = py(fy)
        out.append(
            f'<line x1="{m - 4}" y1="{_px(gy)}" x2="{m}" y2="{_px(gy)}" stroke="#444444"/>'
        )
        out.append(
            f'<text x="{m - 6}" y="{_px(gy + fs * 0.35)}" text-anchor="end" '
            f'fill="#333333">{fy:.3f}</text>'
        )
    out.append(
        f'<text x="{w / 2:.2f}" y="{h - 8}" text-anchor="middle" fill="#333333">'
        f"tf weight of co-count with seed (cognitive effects →)</text>"
    )
    out.append(
        f'<text x="{fs + 2}" y="{h / 2:.2f}" text-anchor="middle" fill="#333333" '
        f'transform="rotate(-90 {fs + 2} {h / 2:.2f})">'
        f"idf weight of total count (ease of processing →)</text>"
    )

    for pt in diagram.points:
        cx, cy = px(pt.x), py(pt.y)
        color = SECTOR_STROKE[pt.sector]
        label = escape(_elide(pt.term, style.label_max_chars))
        tip = escape(
            f"{pt.term} · co={pt.co_count} df={pt.df} · sector {pt.sector}"
            + (" · dominant" if pt.dominant else "")
        )
        out.append(f'<g class="pt"><title>{tip}</title>')
        if pt.dominant:
            out.append(
                f'<circle class="ring" cx="{_px(cx)}" cy="{_px(cy)}" r="8" '
                f'fill="none" stroke="{color}" stroke-width="1.5"/>'
            )
        out.append(
            f'<circle class="marker" cx="{_px(cx)}" cy="{_px(cy)}" r="3.5" fill="{color}"/>'
        )
        out.append(
            f'<text x="{_px(cx - 6)}" y="{_px(cy + fs * 0.35)}" text-anchor="end" '
            f'fill="{color}">{label}</text>'
        )
        out.append("</g>")

    sx, sy = px(diagram.seed_x), py(diagram.seed_y)
    seed_tip = escape(f"{diagram.seed} · df={diagram.seed_df} · seed")
    seed_label = escape(_elide(diagram.seed, style.label_max_chars))
    out.append(f'<g class="seed"><title>{seed_tip}</title>')
    out.append(
        f'<circle class="seed-ring" cx="{_px(sx)}" cy="{_px(sy)}" r="9" '
        f'fill="none" stroke="{SEED_COLOR}" stroke-width="1.5"/>'
    )
    out.append(
        f'<circle class="seed-marker" cx="{_px(sx)}" cy="{_px(sy)}" r="5" fill="{SEED_COLOR}"/>'
    )
    out.append(
        f'<text x="{_px(sx - 12)}" y="{_px(sy + fs * 0.35)}" text-anchor="end" '
        f'font-weight="bold" fill="{SEED_COLOR}">{seed_label}</text>'
    )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _sector_bands(diagram, ylo, yhi, py, w, m, fs) -> list[str]:
    """Three horizontal background bands: A on top (low df), C at the
    bottom, B between, bounded where the ratio rule crosses through idf."""
    base = diagram.params.log_base
    n = diagram.n_docs
    # df at the band edges need not be integer; evaluate the idf formula
    # on the real-valued boundary df = ratio * df_seed.
    y_ab = logb(n / (diagram.params.alpha * diagram.seed_df), base)
    y_bc = logb(n / (diagram.params.gamma * diagram.seed_df), base)
    bands = (
        ("A", max(y_ab, ylo), yhi),
        ("B", max(y_bc, ylo), min(y_ab, yhi)),
        ("C", ylo, min(y_bc, yhi)),
    )
    out = []
    for name, lo, hi in bands:
        if hi <= lo:
            continue
        top, bottom = py(hi), py(lo)
        out.append(
            f'<rect class="band band-{name}" x="{m}" y="{_px(top)}" '
            f'width="{w - 2 * m}" height="{_px(bottom - top)}" fill="{SECTOR_FILL[name]}"/>'
        )
        out.append(
            f'<text x="{w - m - 6}" y="{_px(top + fs + 4)}" text-anchor="end" '
            f'fill="#999999">{name}</text>'
        )
    return out
