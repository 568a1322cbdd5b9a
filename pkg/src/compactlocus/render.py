"""SVG, DOT and ASCII pictures of loci.

An equivariant locus is drawn as a row of "flowers", one per subgroup class:
a base point P(H, 1) with one chromatic tower per column above it. Towers
show heights 2..7, an ellipsis and the point at infinity. Two shading levels
exist: ``locus`` (light) and ``ambient`` (dark), for pictures of a subset
nested inside a larger one.

All renderers work from the JSON form of a locus, so a figure is a pure
function of the JSON it was made from.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .errors import UnknownFormat
from .spaces import INF

FORMATS = ("svg", "dot", "ascii")
HEIGHTS = (2, 3, 4, 5, 6, 7)
ROWS = HEIGHTS + ("...", "inf")  # bottom to top

LIGHT = "#aec6ef"
DARK = "#2f5fb3"
INK = "#1a1a1a"

# geometry (px)
DOT_R = 3.5
TOWER_W = 28
ROW_H = 22
BASE_GAP = 70
FLOWER_GAP = 48
MARGIN = 30
LABEL_H = 34


def _check(fmt):
    if fmt not in FORMATS:
        raise UnknownFormat(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def _threshold(v):
    """JSON column value to ``(start, stop)`` heights, stop exclusive; None if empty."""
    if v is True:
        return (2, None)
    if v in (False, None):
        return None
    if not isinstance(v, dict):
        v = {"from": v}
    start = INF if v["from"] in ("inf", INF) else int(v["from"])
    stop = v.get("below")
    if stop is not None:
        stop = INF if stop in ("inf", INF) else int(stop)
    return (start, stop)


def _row_level(t, row):
    if t is None:
        return False
    start, stop = t
    if row == "inf":
        return stop is None
    if row == "...":
        return start != INF and (stop is None or stop > 8)
    return row >= start and (stop is None or row < stop)


# -- figure model ---------------------------------------------------------------


def flowers_from_eq_json(data, ambient=None):
    """List of flowers ``(label, base_level, [(tower_label, [level per row])])``.

    Levels are 0 (outside), 1 (ambient only) and 2 (in the locus).
    """
    cols = [str(p) for p in data["primes"]] + ["generic"]
    amb = {c["rep"]: c for c in ambient["classes"]} if ambient else {}
    out = []
    for c in data["classes"]:
        a = amb.get(c["rep"])
        towers = []
        for col in cols:
            t = _threshold(c["columns"][col])
            ta = _threshold(a["columns"][col]) if a else None
            levels = [2 if _row_level(t, r) else (1 if _row_level(ta, r) else 0) for r in ROWS]
            towers.append(("q" if col == "generic" else f"p={col}", levels))
        base = 2 if c["height_one"] else (1 if a and a["height_one"] else 0)
        out.append((f"P({c['label']},1)", base, towers))
    return out


def flowers_from_chromatic_json(data, ambient=None):
    cols = list(data["columns"])
    towers = []
    for col in cols + ["default"]:
        src = data["columns"][col] if col != "default" else data.get("default")
        t = _threshold(src)
        ta = None
        if ambient is not None:
            ta = _threshold(ambient["columns"].get(col) if col != "default" else ambient.get("default"))
        levels = [2 if _row_level(t, r) else (1 if _row_level(ta, r) else 0) for r in ROWS]
        towers.append(("q" if col == "default" else f"p={col}", levels))
    base = 2 if data.get("generic") else (1 if ambient and ambient.get("generic") else 0)
    return [("C_1", base, towers)]


# -- SVG -------------------------------------------------------------------------


def _fmt(x):
    return f"{x:.1f}".rstrip("0").rstrip(".")


def _svg_open(w, h, title):
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(w)}" height="{_fmt(h)}" '
        f'viewBox="0 0 {_fmt(w)} {_fmt(h)}" font-family="sans-serif" font-size="11">',
        f"<title>{escape(title)}</title>",
        f'<rect x="0" y="0" width="{_fmt(w)}" height="{_fmt(h)}" fill="#ffffff"/>',
    ]


def _fill(level):
    return {2: LIGHT, 1: DARK}[level]


def _flowers_svg(flowers, title):
    widths = [max(len(t), 1) * TOWER_W for _, _, t in flowers]
    w = 2 * MARGIN + sum(widths) + FLOWER_GAP * (len(flowers) - 1)
    tower_h = ROW_H * (len(ROWS) - 1)
    h = 2 * MARGIN + LABEL_H + tower_h + BASE_GAP + 24
    y_base = MARGIN + LABEL_H + tower_h + BASE_GAP
    y_row = [MARGIN + LABEL_H + tower_h - ROW_H * k for k in range(len(ROWS))]
    out = _svg_open(w, h, title)
    shade, ink = ['<g id="shading">'], ['<g id="points">']
    x0 = MARGIN
    for (label, base, towers), fw in zip(flowers, widths):
        bx = x0 + fw / 2
        if base:
            shade.append(f'<circle cx="{_fmt(bx)}" cy="{_fmt(y_base)}" r="10" fill="{_fill(base)}"/>')
        for j, (tlabel, levels) in enumerate(towers):
            tx = x0 + TOWER_W * (j + 0.5)
            # one rounded band per maximal run of equal nonzero level
            k = 0
            while k < len(levels):
                lv = levels[k]
                end = k
                while end + 1 < len(levels) and levels[end + 1] == lv:
                    end += 1
                if lv:
                    top, bot = y_row[end] - 8, y_row[k] + 8
                    shade.append(
                        f'<rect x="{_fmt(tx - 9)}" y="{_fmt(top)}" width="18" height="{_fmt(bot - top)}" '
                        f'rx="8" ry="8" fill="{_fill(lv)}"/>'
                    )
                k = end + 1
            ink.append(
                f'<line x1="{_fmt(bx)}" y1="{_fmt(y_base)}" x2="{_fmt(tx)}" y2="{_fmt(y_row[0])}" '
                f'stroke="{INK}" stroke-width="0.8"/>'
            )
            ink.append(
                f'<line x1="{_fmt(tx)}" y1="{_fmt(y_row[0])}" x2="{_fmt(tx)}" y2="{_fmt(y_row[-3])}" '
                f'stroke="{INK}" stroke-width="0.8"/>'
            )
            for k, row in enumerate(ROWS):
                if row == "...":
                    for d in (-5, 0, 5):
                        ink.append(f'<circle cx="{_fmt(tx)}" cy="{_fmt(y_row[k] + d)}" r="1" fill="{INK}"/>')
                else:
                    ink.append(f'<circle cx="{_fmt(tx)}" cy="{_fmt(y_row[k])}" r="{DOT_R}" fill="{INK}"/>')
            ink.append(
                f'<text x="{_fmt(tx)}" y="{_fmt(MARGIN + 12)}" text-anchor="middle">{escape(tlabel)}</text>'
            )
        ink.append(f'<circle cx="{_fmt(bx)}" cy="{_fmt(y_base)}" r="{DOT_R}" fill="{INK}"/>')
        ink.append(
            f'<text x="{_fmt(bx)}" y="{_fmt(y_base + 24)}" text-anchor="middle">{escape(label)}</text>'
        )
        x0 += fw + FLOWER_GAP
    ink.append(
        f'<text x="{_fmt(MARGIN - 22)}" y="{_fmt(y_row[-1] + 4)}">&#8734;</text>'
    )
    shade.append("</g>")
    ink.append("</g>")
    return "\n".join(out + shade + ink + ["</svg>", ""])


# -- DOT -------------------------------------------------------------------------


def _dot_attrs(level):
    if level == 2:
        return f'style=filled, fillcolor="{LIGHT}"'
    if level == 1:
        return f'style=filled, fillcolor="{DARK}", fontcolor="#ffffff"'
    return "style=solid"


def _flowers_dot(flowers, title):
    lines = [
        "digraph locus {",
        f'  label="{title}";',
        "  rankdir=BT;",
        '  node [shape=circle, width=0.3, fixedsize=true, fontsize=8];',
    ]
    ranks = {"base": []}
    for r in ROWS:
        ranks[str(r)] = []
    for i, (label, base, towers) in enumerate(flowers):
        bid = f"f{i}_base"
        lines.append(f'  {bid} [label="{label}", shape=box, fixedsize=false, {_dot_attrs(base)}];')
        ranks["base"].append(bid)
        for j, (tlabel, levels) in enumerate(towers):
            prev = bid
            for r, lv in zip(ROWS, levels):
                key = "ell" if r == "..." else str(r)
                nid = f"f{i}_t{j}_{key}"
                text = "…" if r == "..." else ("∞" if r == "inf" else str(r))
                lines.append(f'  {nid} [label="{text}", tooltip="{label} {tlabel}", {_dot_attrs(lv)}];')
                lines.append(f"  {prev} -> {nid} [arrowhead=none];")
                ranks[str(r)].append(nid)
                prev = nid
    for key, ids in ranks.items():
        if ids:
            lines.append("  { rank=same; " + "; ".join(ids) + "; }")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- ASCII -----------------------------------------------------------------------

GLYPH = {0: ".", 1: "o", 2: "#"}
LEGEND = "legend: # in locus   o ambient only   . outside   : ellipsis above height 7"


def _flowers_ascii(flowers, title):
    axis = ["inf", "...", "7", "6", "5", "4", "3", "2", "", "1"]
    blocks = []
    for label, base, towers in flowers:
        widths = [max(len(t), 1) for t, _ in towers]
        cols = []
        for j, ((tlabel, levels), wd) in enumerate(zip(towers, widths)):
            cells = [":" if r == "..." and lv == 0 else GLYPH[lv] for r, lv in zip(ROWS, levels)][::-1]
            cells += ["|", GLYPH[base] if j == 0 else " "]
            cols.append([tlabel.ljust(wd)] + [c.center(wd) for c in cells])
        rows = ["  ".join(col[k] for col in cols) for k in range(len(axis) + 1)]
        width = max(len(label), len(rows[0]))
        blocks.append([label.ljust(width)] + [r.ljust(width) for r in rows])
    lines = [title, ""]
    for k in range(len(axis) + 2):
        ax = "" if k < 2 else axis[k - 2]
        lines.append(ax.rjust(4) + "  " + "  |  ".join(b[k] for b in blocks))
    lines += ["", LEGEND]
    return "\n".join(ln.rstrip() for ln in lines) + "\n"


# -- public entry points -----------------------------------------------------------


def _emit(flowers, fmt, title):
    _check(fmt)
    if fmt == "svg":
        text = _flowers_svg(flowers, title)
    elif fmt == "dot":
        text = _flowers_dot(flowers, title)
    else:
        text = _flowers_ascii(flowers, title)
    return text.encode("utf-8")


def _eq_title(data):
    kind = data.get("kind", "locus")
    normal = f", N={data['normal']}" if data.get("normal") else ""
    return f"{kind} locus, G={data.get('group', 'G')}{normal}"


def render_eq_locus(locus, fmt="svg", ambient=None):
    """Render an EqLocus (or its JSON dict); ``ambient`` is drawn as the darker outer level."""
    data = locus.to_json() if hasattr(locus, "to_json") else locus
    amb = ambient.to_json() if hasattr(ambient, "to_json") else ambient
    return _emit(flowers_from_eq_json(data, amb), fmt, _eq_title(data))


def render_chromatic(subset, fmt="svg", ambient=None, title="subset of Spc(SH^c)"):
    data = subset.to_json() if hasattr(subset, "to_json") else subset
    amb = ambient.to_json() if hasattr(ambient, "to_json") else ambient
    return _emit(flowers_from_chromatic_json(data, amb), fmt, title)


# -- posets -------------------------------------------------------------------------


def _poset_layout(X):
    """Per component, layers bottom (generic) to top (closed points)."""
    comps = []
    for comp in X.components():
        layers = {}
        for x in comp:
            layers.setdefault(X.height(x), []).append(x)
        comps.append([layers[k] for k in sorted(layers)])
    return comps


def _poset_levels(X, subsets):
    """Nesting level per point: 2 for the inner subset, 1 for the outer only."""
    subsets = [frozenset(s.members if hasattr(s, "members") else s) for s in subsets]
    if len(subsets) > 2:
        raise ValueError("at most two subsets can be drawn")
    inner = subsets[0] if subsets else frozenset()
    outer = subsets[1] if len(subsets) > 1 else frozenset()
    return {x: 2 if x in inner else (1 if x in outer else 0) for x in X.points}


def render_poset(X, subsets=(), fmt="svg", title="finite spectral space"):
    """Draw ``X`` with up to two nested subsets, inner first (e.g. ``[Z_f, V]``)."""
    _check(fmt)
    level = _poset_levels(X, subsets)
    comps = _poset_layout(X)
    edges = X.cover_pairs()
    if fmt == "svg":
        text = _poset_svg(X, comps, edges, level, title)
    elif fmt == "dot":
        text = _poset_dot(X, comps, edges, level, title)
    else:
        text = _poset_ascii(comps, edges, level, title)
    return text.encode("utf-8")


def _poset_positions(comps):
    pos, x0 = {}, MARGIN
    depth = max((len(c) for c in comps), default=1)
    for comp in comps:
        width = max(len(layer) for layer in comp) * 50
        for k, layer in enumerate(comp):
            step = width / len(layer)
            for i, x in enumerate(layer):
                pos[x] = (x0 + step * (i + 0.5), MARGIN + 20 + (depth - 1 - k) * 60)
        x0 += width + 40
    return pos, x0 - 40 + MARGIN, 2 * MARGIN + 20 + (depth - 1) * 60 + 20


def _poset_svg(X, comps, edges, level, title):
    pos, w, h = _poset_positions(comps)
    out = _svg_open(max(w, 2 * MARGIN), h, title)
    out.append('<g id="edges">')
    for a, b in edges:
        (xa, ya), (xb, yb) = pos[a], pos[b]
        out.append(
            f'<line x1="{_fmt(xa)}" y1="{_fmt(ya)}" x2="{_fmt(xb)}" y2="{_fmt(yb)}" stroke="{INK}" stroke-width="1"/>'
        )
    out.append("</g>")
    out.append('<g id="points">')
    for x in X.points:
        cx, cy = pos[x]
        lv = level[x]
        fill = _fill(lv) if lv else "#ffffff"
        out.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="9" fill="{fill}" stroke="{INK}" stroke-width="1"/>')
        out.append(f'<text x="{_fmt(cx + 12)}" y="{_fmt(cy + 4)}">{escape(x)}</text>')
    out.append("</g>")
    return "\n".join(out + ["</svg>", ""])


def _poset_dot(X, comps, edges, level, title):
    lines = ["digraph poset {", f'  label="{title}";', "  rankdir=BT;", "  node [shape=circle, fontsize=9];"]
    for x in X.points:
        lines.append(f'  "{x}" [{_dot_attrs(level[x])}];')
    for a, b in edges:
        lines.append(f'  "{a}" -> "{b}" [arrowhead=none];')
    depth = max((len(c) for c in comps), default=0)
    for k in range(depth):
        ids = [x for comp in comps if k < len(comp) for x in comp[k]]
        lines.append("  { rank=same; " + "; ".join(f'"{x}"' for x in ids) + "; }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _poset_ascii(comps, edges, level, title):
    mark = {2: "[{}]", 1: "({})", 0: " {} "}
    depth = max((len(c) for c in comps), default=0)
    blocks = []
    for comp in comps:
        rows = []
        for k in range(depth - 1, -1, -1):
            layer = comp[k] if k < len(comp) else []
            rows.append("  ".join(mark[level[x]].format(x) for x in layer))
        width = max(len(r) for r in rows)
        blocks.append([r.ljust(width) for r in rows])
    lines = [title, ""]
    for k in range(depth):
        lines.append("  |  ".join(b[k] for b in blocks).rstrip())
    lines.append("")
    lines += [f"{a} ~> {b}" for a, b in edges]
    lines += ["", "legend: [x] inner subset   (x) outer subset only   x outside; closed points on top"]
    return "\n".join(lines) + "\n"
