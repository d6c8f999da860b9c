"""Deterministic (i, j)-plane drawings of complexes as SVG, TikZ or plain text.

CFK generators sit at (0, A(x)); an arrow x -> U^n y ends at the translate
U^n·y, drawn as a hollow marker at (-n, A(y) - n).  Hat complexes put every
generator at (0, A).  Items sharing a lattice point are spread sideways.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from xml.sax.saxutils import escape

from kfc.complex import CfkComplex
from kfc.errors import KfcError
from kfc.hat import HatComplex

FORMATS = ("svg", "tikz", "text")
SPREAD = 0.22


@dataclass(frozen=True)
class RenderSpec:
    format: str = "text"
    gradings: bool = False
    arrows: bool = True
    overlay_tau: int | None = None

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}; expected one of {', '.join(FORMATS)}")


@dataclass(frozen=True)
class Item:
    key: tuple[str, int]
    lattice: tuple[int, int]
    x: float
    y: float
    label: str
    solid: bool


@dataclass(frozen=True)
class Layout:
    name: str
    items: tuple[Item, ...]
    segments: tuple[tuple[Item, Item, str], ...]

    def bounds(self) -> tuple[int, int, int, int]:
        i_values = [it.lattice[0] for it in self.items] + [0]
        j_values = [it.lattice[1] for it in self.items] + [0]
        return min(i_values), max(i_values), min(j_values), max(j_values)


def _place(entries):
    """entries: (key, lattice, label, solid) -> Items spread around their lattice point."""
    by_point = defaultdict(list)
    for e in entries:
        by_point[e[1]].append(e)
    items = {}
    for point, group in by_point.items():
        group.sort(key=lambda e: (e[0][1], e[0][0]))
        n = len(group)
        for k, (key, lattice, label, solid) in enumerate(group):
            dx = SPREAD * (k - (n - 1) / 2)
            items[key] = Item(key, lattice, round(lattice[0] + dx, 4), float(lattice[1]), label, solid)
    return items


def layout(c: CfkComplex | HatComplex, gradings: bool = False) -> Layout:
    if isinstance(c, HatComplex):
        if not c.absolute:
            raise KfcError("rendering a hat complex needs absolute gradings")
        entries = []
        for g in c.generators:
            label = f"{g.id} ({g.maslov})" if gradings else g.id
            entries.append(((g.id, 0), (0, g.alexander), label, True))
        items = _place(entries)
        segs = tuple((items[(a.source, 0)], items[(a.target, 0)], f"{a.shift}") for a in c.arrows)
        return Layout(c.name, tuple(sorted(items.values(), key=lambda it: it.key)), segs)
    entries = []
    for g in c.generators:
        label = f"{g.id} ({g.maslov})" if gradings else g.id
        entries.append(((g.id, 0), (0, g.alexander), label, True))
    ghosts = set()
    for a in c.arrows:
        if a.u_power and (a.target, a.u_power) not in ghosts:
            ghosts.add((a.target, a.u_power))
            t = c.by_id[a.target]
            entries.append(((a.target, a.u_power), (-a.u_power, t.alexander - a.u_power),
                            f"U^{a.u_power}{a.target}", False))
    items = _place(entries)
    segs = tuple((items[(a.source, 0)], items[(a.target, a.u_power)], "") for a in c.arrows)
    return Layout(c.name, tuple(sorted(items.values(), key=lambda it: it.key)), segs)


def render(c: CfkComplex | HatComplex, spec: RenderSpec) -> str:
    lay = layout(c, spec.gradings)
    if spec.format == "text":
        return _text(lay, spec)
    if spec.format == "svg":
        return _svg(lay, spec)
    return _tikz(lay, spec)


def _text(lay: Layout, spec: RenderSpec) -> str:
    imin, imax, jmin, jmax = lay.bounds()
    solid = defaultdict(int)
    hollow = set()
    for it in lay.items:
        if it.solid:
            solid[it.lattice] += 1
        else:
            hollow.add(it.lattice)
    width = max(len(str(j)) for j in (jmin, jmax))
    out = [f"complex {lay.name}", f"{'j'.rjust(width)}"]
    for j in range(jmax, jmin - 1, -1):
        cells = []
        for i in range(imin, imax + 1):
            n = solid.get((i, j), 0)
            if n == 1:
                cells.append("*")
            elif 1 < n < 10:
                cells.append(str(n))
            elif n >= 10:
                cells.append("+")
            elif (i, j) in hollow:
                cells.append("o")
            else:
                cells.append(".")
        row = f"{str(j).rjust(width)} |" + "".join(c.rjust(3) for c in cells)
        if spec.overlay_tau is not None and j == spec.overlay_tau:
            row += "   <- j = tau"
        out.append(row)
    out.append(" " * (width + 2) + "".join(str(i).rjust(3) for i in range(imin, imax + 1)) + "  i")
    out.append("legend: * generator, digit = several generators, o = U-translate")
    if spec.arrows:
        out.append(f"arrows ({len(lay.segments)}):")
        for src, tgt, lab in lay.segments:
            shift = f" [{lab}]" if lab else ""
            out.append(f"  {src.label.split(' ')[0]} -> {tgt.label.split(' ')[0]}{shift}"
                       f"   {src.lattice} -> {tgt.lattice}")
    return "\n".join(out) + "\n"


UNIT = 60
MARGIN = 50


def _svg(lay: Layout, spec: RenderSpec) -> str:
    imin, imax, jmin, jmax = lay.bounds()
    imin, imax, jmin, jmax = imin - 1, imax + 1, jmin - 1, jmax + 1
    width = (imax - imin) * UNIT + 2 * MARGIN
    height = (jmax - jmin) * UNIT + 2 * MARGIN

    def X(x):
        return f"{MARGIN + (x - imin) * UNIT:.2f}"

    def Y(y):
        return f"{MARGIN + (jmax - y) * UNIT:.2f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<title>{escape(lay.name)}</title>',
        '<defs><marker id="head" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="7" '
        'markerHeight="7" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z" fill="black"/>'
        '</marker></defs>',
        '<rect x="0" y="0" width="100%" height="100%" fill="white"/>',
    ]
    if spec.overlay_tau is not None:
        t = spec.overlay_tau
        half = 0.2
        out.append(f'<rect class="overlay" x="{X(-half)}" y="{Y(jmax)}" width="{2 * half * UNIT:.2f}" '
                   f'height="{(jmax - t + half) * UNIT:.2f}" fill="#dddddd"/>')
        out.append(f'<rect class="overlay" x="{X(-half)}" y="{Y(t + half)}" '
                   f'width="{(imax + half) * UNIT:.2f}" height="{2 * half * UNIT:.2f}" fill="#dddddd"/>')
    for i in range(imin, imax + 1):
        out.append(f'<line class="grid" x1="{X(i)}" y1="{Y(jmin)}" x2="{X(i)}" y2="{Y(jmax)}" '
                   f'stroke="#e4e4e4" stroke-width="1"/>')
    for j in range(jmin, jmax + 1):
        out.append(f'<line class="grid" x1="{X(imin)}" y1="{Y(j)}" x2="{X(imax)}" y2="{Y(j)}" '
                   f'stroke="#e4e4e4" stroke-width="1"/>')
    out.append(f'<line class="axis" x1="{X(imin)}" y1="{Y(0)}" x2="{X(imax)}" y2="{Y(0)}" stroke="#888888"/>')
    out.append(f'<line class="axis" x1="{X(0)}" y1="{Y(jmin)}" x2="{X(0)}" y2="{Y(jmax)}" stroke="#888888"/>')
    if spec.arrows:
        for src, tgt, lab in lay.segments:
            out.append(f'<line class="arrow" x1="{X(src.x)}" y1="{Y(src.y)}" x2="{X(tgt.x)}" '
                       f'y2="{Y(tgt.y)}" stroke="black" stroke-width="2" marker-end="url(#head)"/>')
            if lab:
                mx, my = (src.x + tgt.x) / 2, (src.y + tgt.y) / 2
                out.append(f'<text class="shift" x="{X(mx + 0.08)}" y="{Y(my)}" font-size="11">{lab}</text>')
    for it in lay.items:
        if it.solid:
            out.append(f'<circle class="gen" cx="{X(it.x)}" cy="{Y(it.y)}" r="4" fill="black"/>')
        else:
            out.append(f'<circle class="translate" cx="{X(it.x)}" cy="{Y(it.y)}" r="4" '
                       f'fill="white" stroke="black"/>')
        out.append(f'<text class="label" x="{X(it.x + 0.1)}" y="{Y(it.y - 0.25)}" '
                   f'font-size="11">{escape(it.label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _tex_label(label: str) -> str:
    return label.replace("_", r"\_").replace("^", r"\^{}").replace("|", r"$|$").replace("#", r"\#")


def _tikz(lay: Layout, spec: RenderSpec) -> str:
    imin, imax, jmin, jmax = lay.bounds()
    out = [f"% {lay.name}", r"\begin{tikzpicture}",
           rf"  \draw[step=1, black!20!white, very thin] ({imin - 0.9}, {jmin - 0.9}) grid ({imax + 0.9}, {jmax + 0.9});",
           rf"  \draw[<->, gray] ({imin - 1}, 0) -- ({imax + 1}, 0) node[right] {{$i$}};",
           rf"  \draw[<->, gray] (0, {jmin - 1}) -- (0, {jmax + 1}) node[above] {{$j$}};"]
    if spec.overlay_tau is not None:
        t = spec.overlay_tau
        out.append(rf"  \fill[black!15!white] (-0.15, {t - 0.15}) rectangle (0.15, {jmax + 0.9});")
        out.append(rf"  \fill[black!15!white] (-0.15, {t - 0.15}) rectangle ({imax + 0.9}, {t + 0.15});")
    names = {}
    for k, it in enumerate(lay.items):
        names[it.key] = f"n{k}"
        style = "" if it.solid else "[fill=white, draw=black]"
        cmd = r"\filldraw" if it.solid else r"\draw"
        out.append(rf"  {cmd}{style} ({it.x:g}, {it.y:g}) circle (2pt) node (n{k}) {{}};")
        out.append(rf"  \node[right, font=\tiny] at (n{k}) {{{_tex_label(it.label)}}};")
    if spec.arrows:
        for src, tgt, lab in lay.segments:
            node = f" node[midway, right, font=\\tiny] {{{lab}}}" if lab else ""
            out.append(rf"  \draw[thick, ->] ({names[src.key]}) -- ({names[tgt.key]}){node};")
    out.append(r"\end{tikzpicture}")
    return "\n".join(out) + "\n"
